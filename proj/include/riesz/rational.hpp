#ifndef RIESZ_RATIONAL_HPP
#define RIESZ_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace riesz {

/// Exact arbitrary-precision rational.  Always reduced to lowest terms
/// with a positive denominator (GMP canonical form).  Every coordinate,
/// measure and breakpoint in the geometry layers is one of these; no
/// tolerance appears anywhere below the numerics in riesz/construction.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}            // NOLINT: implicit by design
    Rational(int n) : v_(n) {}             // NOLINT
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parse "p", "p/q" or a plain decimal like "0.5"/"-1.25".
    static Rational parse(std::string_view s);

    /// Serializes as "p/q", or "p" when the value is an integer.
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    bool is_integer() const { return v_.get_den() == 1; }
    /// Exact floor/ceil as a GMP integer.
    mpz_class floor() const;
    mpz_class ceil() const;
    /// floor() narrowed to int64_t; throws if out of range.
    std::int64_t floor_int64() const;
    std::int64_t ceil_int64() const;

    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    const mpq_class& raw() const { return v_; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

using RatVec = std::vector<Rational>;
using IntVec = std::vector<std::int64_t>;

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator+(const RatVec& a, const IntVec& t);
Rational dot(const RatVec& a, const RatVec& b);
RatVec to_rat(const IntVec& t);
std::vector<double> to_doubles(const RatVec& v);

/// Dense d×d (or r×c) exact rational matrix, row-major.
struct RatMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> a;

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static RatMat identity(std::size_t n);
    bool operator==(const RatMat&) const = default;
};

RatMat transpose(const RatMat& m);
RatMat mat_mul(const RatMat& x, const RatMat& y);
RatVec mat_vec(const RatMat& m, const RatVec& v);
/// Exact determinant by fraction-preserving Gaussian elimination.
Rational det(const RatMat& m);
/// Exact inverse; throws InternalError on singular input.
RatMat inverse(const RatMat& m);
/// True iff the matrix has exactly one nonzero entry per row and column
/// (a scaled permutation); these are the maps that keep boxes axis-aligned.
bool is_monomial(const RatMat& m);

} // namespace riesz

#endif
