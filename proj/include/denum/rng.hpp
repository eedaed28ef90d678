#pragma once

#include <cstdint>
#include <random>

namespace denum {

/// Uniform draw from [0, n) by rejection, so results are reproducible for a
/// fixed seed regardless of the standard library's distribution internals.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0)
        return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

/// Uniform draw from [lo, hi], inclusive.
inline std::int64_t uniform_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

} // namespace denum
