#pragma once

#include <cstdint>
#include <random>

namespace testutil {

// Deterministic across platforms (std distributions are not).
inline long rand_long(std::mt19937_64& rng, long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng() % span);
}

inline bool rand_bool(std::mt19937_64& rng) { return (rng() & 1) != 0; }

} // namespace testutil
