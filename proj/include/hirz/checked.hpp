#ifndef HIRZ_CHECKED_HPP_
#define HIRZ_CHECKED_HPP_

#include <cstdint>
#include <initializer_list>

#include "hirz/error.hpp"

namespace hirz {

using Int = std::int64_t;

/* Width-checked 64-bit arithmetic. Every engine quantity goes through
 * these; a wrapped result is never returned. */
namespace checked {

inline Int add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("addition");
    return r;
}

inline Int sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("subtraction");
    return r;
}

inline Int mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("multiplication");
    return r;
}

inline Int neg(Int x) { return sub(0, x); }

inline Int sum(std::initializer_list<Int> xs) {
    Int r = 0;
    for (Int x : xs) r = add(r, x);
    return r;
}

inline Int mul(std::initializer_list<Int> xs) {
    Int r = 1;
    for (Int x : xs) r = mul(r, x);
    return r;
}

inline Int abs(Int x) { return x < 0 ? neg(x) : x; }

/// Exact division; throws if y does not divide x.
inline Int div_exact(Int x, Int y, const char* what) {
    if (y == 0) throw ConsistencyError(std::string("division by zero in ") + what);
    if (y == -1) return neg(x);
    if (x % y != 0) throw ConsistencyError(std::string("non-integral quotient in ") + what);
    return x / y;
}

/// Floor division for y > 0.
inline Int floor_div(Int x, Int y) {
    Int q = x / y;
    if ((x % y != 0) && (x < 0)) --q;
    return q;
}

/// Ceiling division for y > 0.
inline Int ceil_div(Int x, Int y) {
    Int q = x / y;
    if ((x % y != 0) && (x > 0)) ++q;
    return q;
}

} // namespace checked
} // namespace hirz

#endif // HIRZ_CHECKED_HPP_
