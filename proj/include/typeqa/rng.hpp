#pragma once

#include <cstdint>
#include <string_view>

namespace typeqa {

// Deterministic 64-bit generator (splitmix64). Used instead of <random>
// engines + distributions so that sampled output is byte-identical across
// standard library implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0. Rejection sampling, unbiased.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform double in [0, 1) with 53-bit resolution.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view bytes);

// Stable per-key seed: mixes the global seed with a hash of the key so that
// work sharded by key (e.g. per document) is independent of worker count.
std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view key);

}  // namespace typeqa
