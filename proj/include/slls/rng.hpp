#pragma once

#include <cstdint>
#include <vector>

namespace slls {

// Seedable generator with a fixed, implementation-independent mapping from
// engine output to doubles/integers, so equal seeds give bit-equal streams
// on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) { reseed(seed); }

    void reseed(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform01();

    // Uniform double in [lo, hi); degenerate interval returns lo.
    double uniform(double lo, double hi);

    // Uniform integer in [lo, hi] inclusive.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

    // One point with each component uniform within [lower[k], upper[k]).
    std::vector<double> uniform_vector(const std::vector<double>& lower,
                                       const std::vector<double>& upper);

    std::uint64_t next_u64();

private:
    // xoshiro256** — small, fast, reproducible from the written-out constants.
    std::uint64_t state_[4];
    std::uint64_t seed_ = 0;
};

}  // namespace slls
