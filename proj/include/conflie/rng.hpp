#pragma once

#include <cstdint>
#include <random>

namespace conflie {

// Seeded generator with modulo-reduced draws so that streams are identical
// across platforms and standard libraries.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant here.
    long integer(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(eng() % span);
    }
};

}  // namespace conflie
