#pragma once

#include <cstdint>
#include <stdexcept>

namespace lha {

// Positions, parts, weights and series coefficients are all signed 64-bit.
// Desk-scale inputs stay far from the limits; overflow throws instead of
// wrapping silently.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Floor division, correct for negative a. Requires b > 0.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// Ceiling division, correct for negative a. Requires b > 0.
inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

}  // namespace lha
