#pragma once

#include <array>
#include <cstdint>

namespace pqwf {

/// xoshiro256++ with splitmix64 seeding. All pipeline randomness flows
/// through this generator so runs are reproducible across platforms and
/// standard library versions (std:: distributions are not portable).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    /// Stream keyed by (seed, a, b), e.g. (master_seed, class_code, signal_index).
    /// Distinct keys give statistically independent streams.
    static RngStream derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [0, n). Unbiased (rejection sampling). n must be > 0.
    std::uint64_t uniform_index(std::uint64_t n);

    /// Standard normal deviate (Box-Muller, pairs cached).
    double normal();

private:
    std::array<std::uint64_t, 4> state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// splitmix64 mixing step, exposed for key derivation.
std::uint64_t splitmix64(std::uint64_t& state);

} // namespace pqwf
