#include "ndisc/simulator.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

#include "ndisc/number_theory.hpp"

namespace ndisc {

std::uint64_t hyperperiod(const Schedule& a, const Schedule& b) {
    const u128 h = lcm(a.period(), b.period());
    if (h > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("hyperperiod " + to_string(h) + " exceeds 64 bits");
    return static_cast<std::uint64_t>(h);
}

DriftedPair make_drifted_pair(const Schedule& a, const Schedule& b, std::int64_t drift) {
    const auto h = static_cast<i128>(hyperperiod(a, b));
    const auto d = ((static_cast<i128>(drift) % h) + h) % h;
    return DriftedPair{a, b, static_cast<std::uint64_t>(d)};
}

DiscoveryResult first_discovery(const DriftedPair& pair, std::uint64_t horizon) {
    // The joint pattern repeats every lcm(T_a, T_b) slots.
    const std::uint64_t limit = std::min(horizon, hyperperiod(pair.a, pair.b));
    const auto& active = pair.a.active();
    const Slot period = pair.a.period();
    for (u128 base = 0; base < limit; base += period) {
        for (Slot s : active) {
            const u128 t = base + s;
            if (t >= limit) return {};
            if (pair.b.is_active_wide(t + pair.drift))
                return DiscoveryResult{true, static_cast<std::uint64_t>(t)};
        }
    }
    return {};
}

DiscoveryResult first_discovery(const DriftedPair& pair) {
    return first_discovery(pair, hyperperiod(pair.a, pair.b));
}

DiscoveryResult first_discovery_analytic(std::span<const std::uint64_t> na,
                                         std::span<const std::uint64_t> nb, std::uint64_t drift) {
    if (na.empty() || nb.empty()) throw std::invalid_argument("integer sets must be non-empty");
    DiscoveryResult best;
    for (auto x : na)
        for (auto y : nb) {
            // t ≡ 0 (mod x), t + d ≡ 0 (mod y)
            const auto neg_drift = static_cast<std::int64_t>((y - drift % y) % y);
            const auto solution = solve_congruence_pair(0, x, neg_drift, y);
            if (!solution) continue;
            const auto slot = static_cast<std::uint64_t>(solution->base);
            if (!best.found || slot < best.slot) best = DiscoveryResult{true, slot};
        }
    return best;
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_drift(std::uint64_t seed, std::uint64_t trial, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("drift bound must be positive");
    std::uint64_t state = splitmix64(seed ^ splitmix64(trial));
    // Lemire's unbiased multiply-shift range reduction.
    auto next = [&state] {
        state += kGolden;
        return splitmix64(state);
    };
    u128 m = static_cast<u128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<u128>(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

VerifyReport verify_all_drifts(const Schedule& a, const Schedule& b,
                               const VerifyOptions& options) {
    const std::uint64_t h = hyperperiod(a, b);
    VerifyReport report;
    const bool exhaustive = static_cast<u128>(h) * h <= options.exhaustive_limit;
    if (!exhaustive && !options.allow_sampling)
        throw std::length_error("exhaustive drift scan over hyperperiod " + std::to_string(h) +
                                " exceeds the work budget; enable sampling");
    report.sampled = !exhaustive;
    const std::uint64_t count = exhaustive ? h : options.samples;

    double latency_sum = 0.0;
    std::uint64_t discovered = 0;
    for (std::uint64_t j = 0; j < count; ++j) {
        const std::uint64_t drift = exhaustive ? j : trial_drift(options.seed, j, h);
        const auto result = first_discovery(DriftedPair{a, b, drift}, h);
        if (!result.found) {
            ++report.failing_drifts;
            continue;
        }
        ++discovered;
        latency_sum += static_cast<double>(result.slot);
        report.max_latency = std::max(report.max_latency, result.slot);
    }
    report.drifts_checked = count;
    report.all_discover = report.failing_drifts == 0;
    report.mean_latency = discovered ? latency_sum / static_cast<double>(discovered) : 0.0;
    return report;
}

LatencyDistribution latency_trials(const Schedule& a, const Schedule& b, std::uint64_t trials,
                                   std::uint64_t seed, unsigned threads) {
    if (trials == 0) throw std::invalid_argument("at least one trial is required");
    const std::uint64_t h = hyperperiod(a, b);

    LatencyDistribution dist;
    dist.trial_count = trials;
    dist.trials.resize(trials);

    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            const std::uint64_t drift = trial_drift(seed, trial, h);
            const auto result = first_discovery(DriftedPair{a, b, drift}, h);
            dist.trials[trial] = TrialRecord{trial, drift, result.found, result.slot};
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));
    if (threads <= 1) {
        run_range(0, trials);
    } else {
        std::vector<std::jthread> workers;
        const std::uint64_t chunk = (trials + threads - 1) / threads;
        for (std::uint64_t begin = 0; begin < trials; begin += chunk)
            workers.emplace_back(run_range, begin, std::min(trials, begin + chunk));
    }

    for (const auto& record : dist.trials) {
        if (record.discovered)
            dist.latencies.push_back(record.latency);
        else
            ++dist.undiscovered_count;
    }
    std::sort(dist.latencies.begin(), dist.latencies.end());
    return dist;
}

LatencyDistribution latency_trials(const NodeConfig& a, const NodeConfig& b,
                                   std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    return latency_trials(a.schedule, b.schedule, trials, seed, threads);
}

std::vector<std::pair<std::uint64_t, double>> cdf(const LatencyDistribution& dist,
                                                  std::span<const std::uint64_t> points) {
    if (dist.trial_count == 0) throw std::invalid_argument("empty latency distribution");
    std::vector<std::pair<std::uint64_t, double>> out;
    out.reserve(points.size());
    for (auto point : points) {
        const auto below = std::upper_bound(dist.latencies.begin(), dist.latencies.end(), point) -
                           dist.latencies.begin();
        out.emplace_back(point, static_cast<double>(below) / static_cast<double>(dist.trial_count));
    }
    return out;
}

std::vector<std::uint64_t> cdf_steps(const LatencyDistribution& dist) {
    std::vector<std::uint64_t> steps = dist.latencies;
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    return steps;
}

}  // namespace ndisc
