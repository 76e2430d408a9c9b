#include "riesz/rational.hpp"

#include <limits>
#include <stdexcept>

#include "riesz/errors.hpp"

namespace riesz {

Rational::Rational(long num, long den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw ParseError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::string str(s);
    auto slash = str.find('/');
    if (slash != std::string::npos) {
        mpq_class v;
        if (v.set_str(str, 10) != 0)
            throw ParseError("bad rational literal: " + str);
        if (v.get_den() == 0) throw ParseError("rational with zero denominator: " + str);
        v.canonicalize();
        return Rational(std::move(v));
    }
    auto dot = str.find('.');
    if (dot != std::string::npos) {
        // decimal: digits.digits -> (whole*10^k + frac) / 10^k
        std::string digits = str.substr(0, dot) + str.substr(dot + 1);
        std::size_t k = str.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+" || k == 0)
            throw ParseError("bad rational literal: " + str);
        mpz_class num;
        if (num.set_str(digits, 10) != 0)
            throw ParseError("bad rational literal: " + str);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, k);
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(std::move(v));
    }
    mpq_class v;
    if (v.set_str(str, 10) != 0)
        throw ParseError("bad rational literal: " + str);
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

namespace {
std::int64_t narrow(const mpz_class& z) {
    if (!z.fits_slong_p())
        throw InternalError("integer out of int64 range: " + z.get_str());
    return static_cast<std::int64_t>(z.get_si());
}
} // namespace

std::int64_t Rational::floor_int64() const { return narrow(floor()); }
std::int64_t Rational::ceil_int64() const { return narrow(ceil()); }

RatVec operator+(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec operator+(const RatVec& a, const IntVec& t) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + Rational(static_cast<long>(t[i]));
    return r;
}

Rational dot(const RatVec& a, const RatVec& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec to_rat(const IntVec& t) {
    RatVec r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) r[i] = Rational(static_cast<long>(t[i]));
    return r;
}

std::vector<double> to_doubles(const RatVec& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].to_double();
    return r;
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat transpose(const RatMat& m) {
    RatMat t(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

RatMat mat_mul(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) throw InternalError("mat_mul shape mismatch");
    RatMat z(x.rows, y.cols);
    for (std::size_t r = 0; r < x.rows; ++r)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x.at(r, k) == 0) continue;
            for (std::size_t c = 0; c < y.cols; ++c)
                z.at(r, c) += x.at(r, k) * y.at(k, c);
        }
    return z;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
    if (m.cols != v.size()) throw InternalError("mat_vec shape mismatch");
    RatVec r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

Rational det(const RatMat& m) {
    if (m.rows != m.cols) throw InternalError("det of non-square matrix");
    RatMat w = m;
    std::size_t n = w.rows;
    Rational d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(w.at(pivot, c), w.at(col, c));
            d = -d;
        }
        d *= w.at(col, col);
        Rational inv_p = Rational(1) / w.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (w.at(r, col) == 0) continue;
            Rational f = w.at(r, col) * inv_p;
            for (std::size_t c = col; c < n; ++c)
                w.at(r, c) -= f * w.at(col, c);
        }
    }
    return d;
}

RatMat inverse(const RatMat& m) {
    if (m.rows != m.cols) throw InternalError("inverse of non-square matrix");
    std::size_t n = m.rows;
    RatMat w = m;
    RatMat inv = RatMat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw InternalError("inverse of singular matrix");
        if (pivot != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(w.at(pivot, c), w.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        Rational inv_p = Rational(1) / w.at(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            w.at(col, c) *= inv_p;
            inv.at(col, c) *= inv_p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || w.at(r, col) == 0) continue;
            Rational f = w.at(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                w.at(r, c) -= f * w.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

bool is_monomial(const RatMat& m) {
    if (m.rows != m.cols) return false;
    std::vector<bool> col_used(m.cols, false);
    for (std::size_t r = 0; r < m.rows; ++r) {
        std::size_t nz = m.cols;
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (m.at(r, c) == 0) continue;
            if (nz != m.cols) return false; // second nonzero in row
            nz = c;
        }
        if (nz == m.cols) return false; // zero row
        if (col_used[nz]) return false;
        col_used[nz] = true;
    }
    return true;
}

} // namespace riesz
