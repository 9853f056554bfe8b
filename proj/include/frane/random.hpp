#pragma once

#include <cstdint>
#include <random>

namespace frane {

/// All seeded randomness goes through std::mt19937_64. Its output sequence is
/// fixed by the standard, unlike the std distributions, so draws are made with
/// uniform_index below to stay reproducible across standard libraries.
using Rng = std::mt19937_64;

/// Unbiased draw from [0, bound) by rejection sampling. bound must be > 0.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
    std::uint64_t draw = rng();
    while (draw > limit) draw = rng();
    return draw % bound;
}

}  // namespace frane
