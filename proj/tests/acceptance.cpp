// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ndisc/granularity.hpp"
#include "ndisc/number_theory.hpp"
#include "ndisc/protocols.hpp"
#include "ndisc/report.hpp"
#include "ndisc/simulator.hpp"

using namespace ndisc;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void run(int id, const char* title, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out{false, ""};
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2d. %s (%.3fs) %s\n", out.pass ? "PASS" : "FAIL", id, title,
                seconds_since(start), out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

Outcome two_node_example() {
    const Schedule a = make_schedule(6, {5});
    const Schedule b = make_schedule(9, {1, 8});
    const auto start = Clock::now();
    const auto aligned = first_discovery(DriftedPair{a, b, 0}, 18);
    const auto drifted = first_discovery(DriftedPair{a, rotate(b, 1), 0}, 18);
    const double elapsed = seconds_since(start);
    const bool pass = aligned.found && aligned.slot == 17 && !drifted.found && elapsed < 1e-3;
    return {pass, fmt("aligned slot %llu, drifted found=%d, %.1fus",
                      static_cast<unsigned long long>(aligned.slot), drifted.found, elapsed * 1e6)};
}

Outcome hedis_construction() {
    for (std::uint64_t n = 3; n <= 300; ++n) {
        const Schedule s = hedis_schedule(n);
        if (s.duty_cycle() != Rational(2, n) || s.active_count() != 2 * (n - 1))
            return {false, fmt("n=%llu", static_cast<unsigned long long>(n))};
    }
    return {true, "n in [3, 300]"};
}

Outcome todis_formula() {
    for (std::uint64_t n = 5; n <= 99; n += 2) {
        const std::uint64_t period = (n - 2) * n * (n + 2);
        std::uint64_t count = 0;
        for (std::uint64_t t = 0; t < period; ++t)
            if (t % (n - 2) == 0 || t % n == 0 || t % (n + 2) == 0) ++count;
        // 3(n²−n−1)·period / (n(n²−4)) = 3(n²−n−1)
        const std::uint64_t expected = 3 * (n * n - n - 1) * period / (n * (n * n - 4));
        if (count != expected || todis_schedule(n).active_count() != count)
            return {false, fmt("n=%llu count %llu expected %llu", static_cast<unsigned long long>(n),
                               static_cast<unsigned long long>(count),
                               static_cast<unsigned long long>(expected))};
    }
    return {true, "odd n in [5, 99]"};
}

Outcome counterexamples() {
    const std::vector<std::uint64_t> a{33, 35}, b{75, 77};
    const std::vector<std::uint64_t> c{1600023, 1600025, 1600027}, d{2046915, 2046917, 2046919};
    const auto start = Clock::now();
    const bool small = coprime_pair_property(a, b);
    const bool large = coprime_pair_property(c, d);
    const double elapsed = seconds_since(start);
    bool all_shared = true;
    for (auto x : c)
        for (auto y : d) all_shared = all_shared && gcd(x, y) > 1;
    for (auto x : a)
        for (auto y : b) all_shared = all_shared && gcd(x, y) > 1;
    return {!small && !large && all_shared && elapsed < 1e-3,
            fmt("properties %d/%d, every cross gcd > 1: %d, %.1fus", small, large, all_shared,
                elapsed * 1e6)};
}

Outcome bound_curve() {
    const double at20 = todis_error_upper_bound(0.20);
    const double at10 = todis_error_upper_bound(0.10);
    const double ratio = todis_error_upper_bound(0.01) / (0.01 / 3.0);
    bool monotone = true;
    double previous = 0.0;
    for (int pct = 1; pct <= 50; ++pct) {
        const double value = todis_error_upper_bound(pct / 100.0);
        monotone = monotone && value > previous;
        previous = value;
    }
    const bool pass = std::abs(at20 - 0.0671) <= 0.0005 && at10 <= 0.0334 + 0.0005 && monotone &&
                      ratio >= 0.85 && ratio <= 1.15;
    return {pass, fmt("bound(0.2)=%.5f bound(0.1)=%.5f monotone=%d ratio(0.01)=%.4f", at20, at10,
                      monotone, ratio)};
}

Outcome bound_dominance() {
    double worst_gap = -1.0;
    for (int permille = 1; permille <= 200; ++permille) {
        const double delta = permille / 1000.0;
        const double measured =
            to_double(relative_error(Protocol::Todis, Rational(permille, 1000)).relative_error);
        const double gap = measured - todis_error_upper_bound(delta);
        worst_gap = std::max(worst_gap, gap);
        if (gap > 1e-9) return {false, fmt("delta=%.3f measured exceeds bound by %.3g", delta, gap)};
    }
    return {true, fmt("200 samples, max(measured - bound) = %.3g", worst_gap)};
}

Outcome hedis_guarantee() {
    const std::vector<std::vector<std::uint64_t>> groups{{4, 6, 8, 10}, {5, 7, 9, 11}};
    double worst_ratio = 0.0;
    int pairs = 0;
    for (const auto& group : groups)
        for (auto n : group)
            for (auto m : group) {
                const auto report = verify_all_drifts(hedis_schedule(n), hedis_schedule(m));
                const double ratio = report.mean_latency / static_cast<double>(n * m);
                worst_ratio = std::max(worst_ratio, ratio);
                ++pairs;
                if (!report.all_discover || report.sampled || ratio > 4.0)
                    return {false, fmt("n=%llu m=%llu all=%d mean/nm=%.3f",
                                       static_cast<unsigned long long>(n),
                                       static_cast<unsigned long long>(m), report.all_discover,
                                       ratio)};
            }
    return {true, fmt("%d pairs exhaustive, max mean/(nm) = %.3f", pairs, worst_ratio)};
}

Outcome crt_oracle() {
    std::uint64_t cases = 0;
    for (std::uint64_t m = 1; m <= 30; ++m)
        for (std::uint64_t n = 1; n <= 30; ++n) {
            const std::uint64_t l = std::lcm(m, n);
            for (std::int64_t a = 0; a < 30; ++a)
                for (std::int64_t b = 0; b < 30; ++b) {
                    std::optional<std::uint64_t> brute;
                    for (std::uint64_t x = 0; x < l && !brute; ++x)
                        if (x % m == static_cast<std::uint64_t>(a) % m &&
                            x % n == static_cast<std::uint64_t>(b) % n)
                            brute = x;
                    const auto solved = solve_congruence_pair(a, m, b, n);
                    ++cases;
                    const bool agree = solved.has_value() == brute.has_value() &&
                                       (!solved || (solved->base == *brute && solved->modulus == l));
                    if (!agree)
                        return {false, fmt("m=%llu n=%llu a=%lld b=%lld",
                                           static_cast<unsigned long long>(m),
                                           static_cast<unsigned long long>(n),
                                           static_cast<long long>(a), static_cast<long long>(b))};
                }
        }
    return {true, fmt("%llu cases", static_cast<unsigned long long>(cases))};
}

Outcome analytic_equivalence() {
    std::mt19937_64 rng(20240601);
    int compared = 0, discovered = 0;
    while (compared < 500) {
        std::vector<std::uint64_t> na(1 + rng() % 3), nb(1 + rng() % 3);
        for (auto& x : na) x = 2 + rng() % 60;
        for (auto& y : nb) y = 2 + rng() % 60;
        if (lcm_of(na) > 100'000 || lcm_of(nb) > 100'000) continue;
        const Schedule a = coprimality_schedule(na), b = coprimality_schedule(nb);
        // Keep the full-horizon scan of never-discovering pairs affordable.
        if (!coprime_pair_property(na, nb) && lcm(a.period(), b.period()) > 50'000'000) continue;
        const std::uint64_t d = rng() % hyperperiod(a, b);
        const auto scan = first_discovery(DriftedPair{a, b, d});
        const auto analytic = first_discovery_analytic(na, nb, d);
        if (!(scan == analytic))
            return {false, fmt("config %d drift %llu: scan %d/%llu analytic %d/%llu", compared,
                               static_cast<unsigned long long>(d), scan.found,
                               static_cast<unsigned long long>(scan.slot), analytic.found,
                               static_cast<unsigned long long>(analytic.slot))};
        discovered += scan.found;
        ++compared;
    }
    return {true, fmt("500 configurations, %d discovering", discovered)};
}

Outcome simulation_experiment() {
    const std::pair<Rational, Rational> scenarios[] = {{Rational(1, 100), Rational(5, 100)},
                                                       {Rational(1, 100), Rational(10, 100)},
                                                       {Rational(5, 100), Rational(5, 100)},
                                                       {Rational(1, 100), Rational(1, 100)}};
    std::string detail;
    for (const auto& [da, db] : scenarios) {
        detail += "[" + to_decimal_string(da) + "/" + to_decimal_string(db) + ":";
        for (Protocol protocol : kAllProtocols) {
            const NodeConfig a = select_params(protocol, da);
            const NodeConfig b = select_params(protocol, db);
            const auto dist = latency_trials(a, b, 1000, 2024);
            if (dist.undiscovered_count != 0 || dist.trial_count != 1000)
                return {false, std::string(protocol_name(protocol)) + " left pairs undiscovered"};
            const auto set_a = coprimality_set(a.params), set_b = coprimality_set(b.params);
            if (set_a && set_b) {
                if (const auto bound = worst_case_bound(*set_a, *set_b);
                    bound && u128{dist.latencies.back()} >= *bound)
                    return {false, std::string(protocol_name(protocol)) + " exceeded its bound"};
            }
            detail += " " + std::string(protocol_name(protocol)) + "=" +
                      std::to_string(dist.latencies.back());
        }
        detail += "] ";
    }
    return {true, "max latency per protocol " + detail};
}

Outcome granularity_ordering() {
    double todis = 0, disco = 0, light = 0;
    int count = 0;
    for (std::uint64_t k = 3; k <= 100; ++k) {
        const Rational delta(1, k);
        if (relative_error(Protocol::Hedis, delta).relative_error != 0)
            return {false, fmt("hedis inexact at 1/%llu", static_cast<unsigned long long>(k))};
        todis += to_double(relative_error(Protocol::Todis, delta).relative_error);
        disco += to_double(relative_error(Protocol::Disco, delta).relative_error);
        light += to_double(relative_error(Protocol::Searchlight, delta).relative_error);
        ++count;
    }
    todis /= count;
    disco /= count;
    light /= count;
    return {todis < disco && disco < light,
            fmt("mean error todis %.5f < disco %.5f < searchlight %.5f", todis, disco, light)};
}

Outcome determinism() {
    const RunMetadata meta{"ndisc simulate --protocols all --delta-a 0.01 --delta-b 0.05", 77};
    for (Protocol protocol : kAllProtocols) {
        const NodeConfig a = select_params(protocol, Rational(1, 100));
        const NodeConfig b = select_params(protocol, Rational(5, 100));
        const auto first = latency_trials(a, b, 200, 77, 1);
        const auto second = latency_trials(a, b, 200, 77, 4);
        if (trials_csv(first, meta) != trials_csv(second, meta) ||
            cdf_csv(first, meta) != cdf_csv(second, meta))
            return {false, std::string(protocol_name(protocol)) + " output differs"};
    }
    return {true, "trial and CDF CSVs byte-identical across reruns and thread counts"};
}

}  // namespace

int main() {
    run(1, "two-node example: slot 17, no discovery after one-slot rotation", two_node_example);
    run(2, "hedis duty cycle 2/n with 2(n-1) active slots", hedis_construction);
    run(3, "todis active count equals the closed-form duty cycle", todis_formula);
    run(4, "co-prime pair counterexamples", counterexamples);
    run(5, "todis error bound curve", bound_curve);
    run(6, "measured todis error under the bound", bound_dominance);
    run(7, "hedis same-parity discovery under every drift", hedis_guarantee);
    run(8, "congruence solver against brute force", crt_oracle);
    run(9, "analytic discovery equals slot scan", analytic_equivalence);
    run(10, "1000-trial latency experiments", simulation_experiment);
    run(11, "granularity ordering on reciprocal duty cycles", granularity_ordering);
    run(12, "simulation output determinism", determinism);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
