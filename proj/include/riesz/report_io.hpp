#ifndef RIESZ_REPORT_IO_HPP
#define RIESZ_REPORT_IO_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace riesz {

/// Canonical JSON value for report output: object keys are emitted in
/// sorted order and doubles with 17 significant digits, so identical
/// reports serialize to identical bytes.
class JVal {
public:
    JVal() : v_(nullptr) {}
    JVal(std::nullptr_t) : v_(nullptr) {}
    JVal(bool b) : v_(b) {}
    JVal(int i) : v_(static_cast<std::int64_t>(i)) {}
    JVal(long i) : v_(static_cast<std::int64_t>(i)) {}
    JVal(long long i) : v_(static_cast<std::int64_t>(i)) {}
    JVal(unsigned long long u) : v_(static_cast<std::uint64_t>(u)) {}
    JVal(unsigned long u) : v_(static_cast<std::uint64_t>(u)) {}
    JVal(double d) : v_(d) {}
    JVal(const char* s) : v_(std::string(s)) {}
    JVal(std::string s) : v_(std::move(s)) {}

    static JVal object() { JVal v; v.v_ = Object{}; return v; }
    static JVal array() { JVal v; v.v_ = Array{}; return v; }

    JVal& operator[](const std::string& key); // object access, creates
    void push(JVal v);                        // array append

    std::string dump() const; // compact canonical form

private:
    using Object = std::map<std::string, JVal>;
    using Array = std::vector<JVal>;
    std::variant<std::nullptr_t, bool, std::int64_t, std::uint64_t, double, std::string,
                 Object, Array>
        v_;

    void write(std::string& out) const;
};

/// %.17g with a guaranteed decimal point or exponent, so doubles stay
/// doubles after a JSON round trip.
std::string format_double_17(double d);

void write_text_file(const std::string& path, const std::string& content);

} // namespace riesz

#endif
