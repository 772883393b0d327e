#pragma once

#include <cstdint>
#include <limits>

namespace percolab {

// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Keyed hash of (seed, counter); used for per-edge coins and per-trial seeds.
constexpr std::uint64_t hash_key(std::uint64_t seed, std::uint64_t counter) noexcept {
    return mix64(mix64(seed) ^ (counter * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
}

// Maps 64 random bits to [0, 1) using the top 53 bits.
constexpr double unit_double(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Seed of trial `trial` under master seed `master`.
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) noexcept {
    return hash_key(master ^ 0x6a09e667f3bcc908ULL, trial);
}

/// Counter-based generator: output i is hash_key(seed, i).
///
/// Satisfies UniformRandomBitGenerator, but `below` and `uniform` should be
/// preferred over <random> distributions: their output is fixed by this
/// header rather than by the standard library implementation.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return hash_key(seed_, counter_++); }

    __extension__ using wide = unsigned __int128;

    // Uniform integer in [0, bound); bound > 0. Lemire's nearly-divisionless method.
    std::uint64_t below(std::uint64_t bound) noexcept {
        wide m = static_cast<wide>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<wide>((*this)()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    double uniform() noexcept { return unit_double((*this)()); }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t position() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace percolab
