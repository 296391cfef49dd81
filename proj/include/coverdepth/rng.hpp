#pragma once

#include <cstdint>

namespace coverdepth {

// splitmix64: the project's single named RNG. Every randomized component
// (Monte Carlo trials, test-data generation) derives its stream from a seed
// plus a counter, so results never depend on thread scheduling.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, n) by rejection.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t x = next();
            if (x >= limit) return x % n;
        }
    }

  private:
    std::uint64_t state_;
};

// The splitmix64 output finalizer; a bijection on 64-bit words.
inline std::uint64_t splitmix_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Substream for a given counter (trial index, test-case index, ...). The
// counter is scrambled through the finalizer so the state walks of distinct
// substreams land far apart instead of overlapping stepwise.
inline SplitMix64 rng_substream(std::uint64_t seed, std::uint64_t counter) {
    return SplitMix64(splitmix_mix(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL));
}

inline constexpr const char* kRngName = "splitmix64";

}  // namespace coverdepth
