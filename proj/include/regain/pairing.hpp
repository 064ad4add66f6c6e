#pragma once

#include <cstdint>
#include <utility>

namespace regain {

/// Cantor pairing <m,n> = (m+n)(m+n+1)/2 + n.
inline std::uint64_t pair(std::uint64_t m, std::uint64_t n) {
    std::uint64_t s = m + n;
    return s * (s + 1) / 2 + n;
}

/// Inverse of pair: pair(unpair(k)) == k.
inline std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t k) {
    // Largest s with s(s+1)/2 <= k, found from the real root then adjusted.
    std::uint64_t s = static_cast<std::uint64_t>((__builtin_sqrtl(8.0L * static_cast<long double>(k) + 1.0L) - 1.0L) / 2.0L);
    while (s * (s + 1) / 2 > k) --s;
    while ((s + 1) * (s + 2) / 2 <= k) ++s;
    std::uint64_t n = k - s * (s + 1) / 2;
    return {s - n, n};
}

/// Length of the binary representation, with log_len(0) = 1.
inline std::uint64_t log_len(std::uint64_t n) {
    if (n == 0) return 1;
    return 64u - static_cast<std::uint64_t>(__builtin_clzll(n));
}

}  // namespace regain
