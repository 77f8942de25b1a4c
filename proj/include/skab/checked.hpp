#pragma once

// Overflow-checked unsigned 64-bit arithmetic. Every operation throws
// Error{Errc::overflow} instead of wrapping.

#include <cstdint>
#include <string>

#include "skab/error.hpp"

namespace skab {

using u64 = std::uint64_t;

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(Errc::overflow, std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline u64 checked_sub(u64 a, u64 b) {
    u64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(Errc::overflow, std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::overflow, std::to_string(a) + " * " + std::to_string(b));
    return r;
}

// a*b + c
inline u64 checked_fma(u64 a, u64 b, u64 c) { return checked_add(checked_mul(a, b), c); }

} // namespace skab
