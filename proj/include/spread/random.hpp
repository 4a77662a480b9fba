// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace spread {

// Counter-based normals: draw i of stream `seed` depends only on (seed, i).

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Uniform in the open interval (0, 1).
inline double to_unit(std::uint64_t bits) { return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53; }

/// Two independent N(0,1) for path i (Box-Muller).
inline std::pair<double, double> normal_pair(std::uint64_t seed, std::uint64_t i) {
    const std::uint64_t key = splitmix64(seed ^ splitmix64(i));
    const double u1 = to_unit(splitmix64(key));
    const double u2 = to_unit(splitmix64(key ^ 0xD1B54A32D192ED03ULL));
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 6.283185307179586476925286766559 * u2;
    return {rad * std::cos(ang), rad * std::sin(ang)};
}

/// Deterministic child seed, e.g. per table cell.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(base ^ splitmix64(a)) ^ splitmix64(b + 0x632BE59BD9B4E019ULL));
}

}  // namespace spread
