#pragma once

#include <cstdint>

#include "parsep/errors.hpp"

namespace parsep {

using Integer = std::int64_t;

inline Integer checked_add(Integer a, Integer b) {
    Integer out;
    if (__builtin_add_overflow(a, b, &out)) throw IntegerOverflow("integer overflow in addition");
    return out;
}

inline Integer checked_sub(Integer a, Integer b) {
    Integer out;
    if (__builtin_sub_overflow(a, b, &out)) throw IntegerOverflow("integer overflow in subtraction");
    return out;
}

inline Integer checked_mul(Integer a, Integer b) {
    Integer out;
    if (__builtin_mul_overflow(a, b, &out)) throw IntegerOverflow("integer overflow in multiplication");
    return out;
}

} // namespace parsep
