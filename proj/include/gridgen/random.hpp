#pragma once

#include <cstdint>
#include <random>

namespace gridgen {

// Deterministic RNG used by every stochastic component. std::mt19937_64 is
// fully specified by the standard; the bounded-int and unit-interval mappings
// below avoid std::uniform_*_distribution, whose output is
// implementation-defined, so a seed reproduces bit-identical streams on any
// platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, n). Lemire multiply-shift with rejection: unbiased.
    std::uint64_t below(std::uint64_t n) {
        __uint128_t product = static_cast<__uint128_t>(next_u64()) * n;
        auto low = static_cast<std::uint64_t>(product);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                product = static_cast<__uint128_t>(next_u64()) * n;
                low = static_cast<std::uint64_t>(product);
            }
        }
        return static_cast<std::uint64_t>(product >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform unordered node pair i != j from {0, .., n-1}.
    std::pair<std::uint32_t, std::uint32_t> node_pair(std::uint32_t n) {
        auto i = static_cast<std::uint32_t>(below(n));
        auto j = static_cast<std::uint32_t>(below(n - 1));
        if (j >= i) ++j;
        return {i, j};
    }

    // Independent stream for worker `index`, derived from a master seed.
    static std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
        // SplitMix64 scramble of (master, index); distinct indexes give
        // uncorrelated mt19937_64 seedings.
        std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace gridgen
