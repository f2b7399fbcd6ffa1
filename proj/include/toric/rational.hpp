#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "toric/checked.hpp"

namespace toric {

/// Exact rational number with 64-bit checked components.
///
/// Always stored reduced with a positive denominator, so equality is
/// component-wise and zero is uniquely 0/1.
class Rational {
public:
    constexpr Rational() = default;
    Rational(Int n) : num_(n), den_(1) {}  // NOLINT: implicit integer promotion is intended
    Rational(Int n, Int d);

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    Int floor() const { return floor_div(num_, den_); }
    Int ceil() const { return ceil_div(num_, den_); }

    Rational operator-() const { return {checked_neg(num_), den_}; }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "num/den", or just "num" for integers.
    std::string str() const;
    /// Always "num/den" (the JSON wire form).
    std::string fraction_str() const;
    /// Accepts "n", "n/d" (d != 0).
    static Rational parse(std::string_view text);

private:
    Int num_ = 0;
    Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace toric
