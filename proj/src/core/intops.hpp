#pragma once

#include <cstdint>
#include <limits>

#include "core/errors.hpp"

// Checked 64-bit integer helpers. Every overflow throws OverflowError.

namespace betti {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflows 64 bits");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflows 64 bits");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflows 64 bits");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min())
        throw OverflowError("integer negation overflows 64 bits");
    return -a;
}

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    __int128 r = 1;
    for (std::int64_t d = 1; d <= k; ++d) {
        r = r * (n - k + d) / d; // exact at every step
        if (r > std::numeric_limits<std::int64_t>::max())
            throw OverflowError("binomial coefficient overflows 64 bits");
    }
    return static_cast<std::int64_t>(r);
}

/// base^exp for exp >= 0, checked.
inline std::int64_t checked_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

} // namespace betti
