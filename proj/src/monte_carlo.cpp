#include "pubcomm/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pubcomm {

double SplitMix64::next_normal() {
    if (has_spare) {
        has_spare = false;
        return spare;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.28318530717958647693 * u2;
    spare = radius * std::sin(angle);
    has_spare = true;
    return radius * std::cos(angle);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

struct Accumulator {
    double sum_w = 0.0, sum_w2 = 0.0, sum_a = 0.0, sum_a2 = 0.0;

    void add(double welfare, double action) {
        sum_w += welfare;
        sum_w2 += welfare * welfare;
        sum_a += action;
        sum_a2 += action * action;
    }

    void merge(const Accumulator& other) {
        sum_w += other.sum_w;
        sum_w2 += other.sum_w2;
        sum_a += other.sum_a;
        sum_a2 += other.sum_a2;
    }
};

double standard_error(double sum, double sum_sq, std::uint64_t n) {
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    const double mean = sum / static_cast<double>(n);
    double var = (sum_sq - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1);
    if (var < 0.0) var = 0.0;  // rounding guard
    return std::sqrt(var / static_cast<double>(n));
}

// Runs fn(chunk_index) over [0, chunks); chunk results are merged in index
// order afterwards, so the worker count never affects the totals.
template <class Fn>
std::vector<Accumulator> run_chunks(std::uint64_t chunks, int threads, Fn&& fn) {
    std::vector<Accumulator> results(chunks);
    const unsigned workers =
        std::min<std::uint64_t>(chunks, threads > 1 ? static_cast<unsigned>(threads) : 1u);
    if (workers <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) results[c] = fn(c);
        return results;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
                results[c] = fn(c);
            }
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

constexpr std::uint64_t kChunk = 1024;

}  // namespace

SimOutcome simulate(const ModelParams& params, const Equilibrium& eq, std::uint64_t draws,
                    std::uint32_t receivers_per_draw, std::uint64_t seed, int threads) {
    params.validate();
    if (draws < 1 || receivers_per_draw < 1) {
        throw std::invalid_argument("simulate: draws and receivers_per_draw must be >= 1");
    }

    const double sd_theta = prior_theta(params).sd();
    const double sd_y = std::sqrt(1.0 / params.alpha);
    const double sd_x = std::sqrt(1.0 / params.beta);
    const ThresholdRule rule = equilibrium_threshold_rule(params, eq);

    const std::uint64_t chunks = (draws + kChunk - 1) / kChunk;
    auto chunk_results = run_chunks(chunks, threads, [&](std::uint64_t c) {
        Accumulator acc;
        const std::uint64_t begin = c * kChunk;
        const std::uint64_t end = std::min(begin + kChunk, draws);
        for (std::uint64_t d = begin; d < end; ++d) {
            SplitMix64 rng(substream_seed(seed, d));
            const double theta = params.mu + sd_theta * rng.next_normal();
            const bool informed = rng.next_unit() <= params.p;
            std::optional<double> y;
            if (informed) y = theta + sd_y * rng.next_normal();
            const double threshold = rule.threshold_for(disclosure_rule(eq, y));
            std::uint32_t acting = 0;
            for (std::uint32_t i = 0; i < receivers_per_draw; ++i) {
                if (theta + sd_x * rng.next_normal() >= threshold) ++acting;
            }
            const double action = static_cast<double>(acting) / receivers_per_draw;
            acc.add((params.r + theta) * action, action);
        }
        return acc;
    });

    Accumulator total;
    for (const auto& acc : chunk_results) total.merge(acc);

    SimOutcome out;
    out.draws = draws;
    out.receivers_per_draw = receivers_per_draw;
    out.seed = seed;
    out.mean_welfare = total.sum_w / static_cast<double>(draws);
    out.mean_aggregate_action = total.sum_a / static_cast<double>(draws);
    out.se_welfare = standard_error(total.sum_w, total.sum_w2, draws);
    out.se_action = standard_error(total.sum_a, total.sum_a2, draws);
    return out;
}

double simulate_aggregate_action(const ModelParams& params, double theta, double threshold,
                                 std::uint64_t n, std::uint64_t seed) {
    params.validate();
    if (n < 1) throw std::invalid_argument("simulate_aggregate_action: n must be >= 1");
    const double sd_x = std::sqrt(1.0 / params.beta);
    std::uint64_t acting = 0;
    const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        SplitMix64 rng(substream_seed(seed, c));
        const std::uint64_t begin = c * kChunk;
        const std::uint64_t end = std::min(begin + kChunk, n);
        for (std::uint64_t i = begin; i < end; ++i) {
            if (theta + sd_x * rng.next_normal() >= threshold) ++acting;
        }
    }
    return static_cast<double>(acting) / static_cast<double>(n);
}

}  // namespace pubcomm
