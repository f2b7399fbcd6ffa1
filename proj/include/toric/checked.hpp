#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace toric {

using Int = std::int64_t;

// Every arithmetic step that can grow goes through these helpers; on overflow
// they throw instead of wrapping.

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

inline Int gcd(Int a, Int b) { return std::gcd(checked_abs(a), checked_abs(b)); }

inline Int lcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    const Int g = gcd(a, b);
    return checked_mul(checked_abs(a) / g, checked_abs(b));
}

/// Floor division for a positive divisor.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(checked_neg(a), b); }

/// Euclidean remainder in [0, |m|).
inline Int mod_floor(Int a, Int m) {
    Int r = a % m;
    if (r < 0) r += (m < 0 ? -m : m);
    return r;
}

/// Exact division; throws if `b` does not divide `a`.
inline Int exact_div(Int a, Int b) {
    if (b == 0 || a % b != 0) throw std::domain_error("inexact integer division");
    return a / b;
}

/// Binomial coefficient C(n, 2).
inline Int choose2(Int n) { return n < 2 ? 0 : checked_mul(n, n - 1) / 2; }

}  // namespace toric
