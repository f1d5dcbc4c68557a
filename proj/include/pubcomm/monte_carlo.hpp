#pragma once
// Finite-sample oracle for the analytic aggregate-action and welfare values:
// plays the game draw by draw with a counter-based RNG, so results are
// bit-identical for a given seed no matter how many workers run the draws.

#include <cstdint>

#include "pubcomm/equilibrium.hpp"

namespace pubcomm {

// splitmix64: each stream is a pure function of its seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform on (0, 1].
    double next_unit() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    // Standard normal via Box-Muller; the spare value is cached.
    double next_normal();

    double spare = 0.0;
    bool has_spare = false;
};

// Independent substream for (seed, index); the basis of parallel determinism.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

struct SimOutcome {
    double mean_welfare = 0.0;
    double se_welfare = 0.0;
    double mean_aggregate_action = 0.0;
    double se_action = 0.0;
    std::uint64_t draws = 0;
    std::uint32_t receivers_per_draw = 0;
    std::uint64_t seed = 0;
};

// Simulates the full game: theta from the prior, the sender informed with
// probability p, equilibrium disclosure, receivers_per_draw private signals
// against the message's threshold; records the acting fraction and realized
// welfare (r + theta) * A per draw. draws = 1 reports NaN standard errors.
SimOutcome simulate(const ModelParams& params, const Equilibrium& eq, std::uint64_t draws,
                    std::uint32_t receivers_per_draw, std::uint64_t seed, int threads = 1);

// Fraction of n signals x ~ N(theta, 1/beta) at or above the threshold.
double simulate_aggregate_action(const ModelParams& params, double theta, double threshold,
                                 std::uint64_t n, std::uint64_t seed);

}  // namespace pubcomm
