#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ndisc/protocols.hpp"
#include "ndisc/schedule.hpp"

namespace ndisc {

/// Two schedules with b offset by `drift`: global slot t is slot t of a and
/// slot t + drift of b. Drift is kept in [0, lcm(T_a, T_b)).
struct DriftedPair {
    const Schedule& a;
    const Schedule& b;
    std::uint64_t drift;
};

/// Throws std::overflow_error when lcm(T_a, T_b) exceeds 64 bits.
std::uint64_t hyperperiod(const Schedule& a, const Schedule& b);

DriftedPair make_drifted_pair(const Schedule& a, const Schedule& b, std::int64_t drift);

struct DiscoveryResult {
    bool found = false;
    std::uint64_t slot = 0;  // valid when found

    bool operator==(const DiscoveryResult&) const = default;
};

/// Smallest t in [0, horizon) with a active at t and b active at t + drift.
/// Plain slot scan.
DiscoveryResult first_discovery(const DriftedPair& pair, std::uint64_t horizon);
/// Same with the canonical horizon lcm(T_a, T_b).
DiscoveryResult first_discovery(const DriftedPair& pair);

/// Divisibility schedules over `na` and `nb`: minimal solution of
/// t ≡ 0 (mod x), t ≡ −d (mod y) over all cross-pairs (x, y).
DiscoveryResult first_discovery_analytic(std::span<const std::uint64_t> na,
                                         std::span<const std::uint64_t> nb, std::uint64_t drift);

struct VerifyOptions {
    /// Budget of drift × slot work for the exhaustive scan.
    std::uint64_t exhaustive_limit = 100'000'000;
    /// Fall back to sampled drifts when over budget instead of throwing.
    bool allow_sampling = false;
    std::uint64_t samples = 10'000;
    std::uint64_t seed = 0;
};

struct VerifyReport {
    bool all_discover = false;
    std::uint64_t max_latency = 0;  // over discovering drifts
    double mean_latency = 0.0;      // over discovering drifts
    std::uint64_t drifts_checked = 0;
    std::uint64_t failing_drifts = 0;
    bool sampled = false;
};

/// Every drift in [0, lcm(T_a, T_b)) with horizon lcm(T_a, T_b).
/// Throws std::length_error when over budget and sampling is off.
VerifyReport verify_all_drifts(const Schedule& a, const Schedule& b,
                               const VerifyOptions& options = {});

struct TrialRecord {
    std::uint64_t trial;
    std::uint64_t drift;
    bool discovered;
    std::uint64_t latency;  // slot of first discovery; valid when discovered
};

struct LatencyDistribution {
    std::vector<std::uint64_t> latencies;  // ascending
    std::uint64_t trial_count = 0;
    std::uint64_t undiscovered_count = 0;
    std::vector<TrialRecord> trials;  // in trial order
};

/// Per-trial drift generator: uniform in [0, bound), a pure function of
/// (seed, trial).
std::uint64_t trial_drift(std::uint64_t seed, std::uint64_t trial, std::uint64_t bound);

/// `threads` = 0 picks the hardware concurrency. Output does not depend on it.
LatencyDistribution latency_trials(const Schedule& a, const Schedule& b, std::uint64_t trials,
                                   std::uint64_t seed, unsigned threads = 0);
LatencyDistribution latency_trials(const NodeConfig& a, const NodeConfig& b,
                                   std::uint64_t trials, std::uint64_t seed,
                                   unsigned threads = 0);

/// Fraction of trials with latency <= each point; undiscovered trials never count.
/// Throws std::invalid_argument on an empty distribution.
std::vector<std::pair<std::uint64_t, double>> cdf(const LatencyDistribution& dist,
                                                  std::span<const std::uint64_t> points);

/// Distinct latencies in ascending order, i.e. the CDF's step points.
std::vector<std::uint64_t> cdf_steps(const LatencyDistribution& dist);

}  // namespace ndisc
