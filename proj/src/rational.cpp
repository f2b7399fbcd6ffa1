#include "toric/rational.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace toric {

Rational::Rational(Int n, Int d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = checked_neg(n);
        d = checked_neg(d);
    }
    const Int g = gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

Rational operator+(const Rational& a, const Rational& b) {
    const Int g = gcd(a.den_, b.den_);
    const Int n = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
    return {n, checked_mul(a.den_, b.den_ / g)};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    const Int g1 = gcd(a.num_, b.den_);
    const Int g2 = gcd(b.num_, a.den_);
    const Int n = checked_mul(a.num_ / (g1 ? g1 : 1), b.num_ / (g2 ? g2 : 1));
    const Int d = checked_mul(a.den_ / (g2 ? g2 : 1), b.den_ / (g1 ? g1 : 1));
    return {n, d};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : fraction_str();
}

std::string Rational::fraction_str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

Int parse_int(std::string_view s) {
    Int v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return {parse_int(text)};
    const Int d = parse_int(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return {parse_int(text.substr(0, slash)), d};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace toric
