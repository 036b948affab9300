#include "ndisc/granularity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ndisc {

GranularityRecord relative_error(Protocol protocol, const Rational& delta,
                                 const SelectionOptions& options) {
    Selection chosen = choose_params(protocol, delta, options);
    Rational err = abs(Rational(chosen.achieved_delta - delta)) / delta;
    return GranularityRecord{delta, protocol, std::move(chosen.params),
                             std::move(chosen.achieved_delta), std::move(err), {}};
}

double todis_duty_curve(double n) {
    return 3.0 * (n * n - n - 1.0) / (n * (n * n - 4.0));
}

namespace {

double bound_quartic(double delta, double k) {
    const double k2 = k * k;
    return 16.0 * delta * k2 * k2 - 24.0 * k2 * k + (12.0 - 40.0 * delta) * k2 + 36.0 * k +
           9.0 * delta - 9.0;
}

}  // namespace

double todis_bound_root(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::domain_error("todis bound needs a duty cycle in (0, 1)");
    // The quartic is -9 at k = 3/2 for every delta, and positive for k >= 2/delta + 2;
    // its other real roots lie below 3/2.
    double lo = 1.5;
    double hi = 2.0 / delta + 2.0;
    if (!(bound_quartic(delta, lo) < 0.0 && bound_quartic(delta, hi) > 0.0))
        throw std::domain_error("no admissible root of the todis bound quartic");
    while (hi - lo > 1e-12 * std::max(1.0, lo)) {
        const double mid = 0.5 * (lo + hi);
        if (bound_quartic(delta, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double todis_error_upper_bound(double delta) {
    const double k = todis_bound_root(delta);
    return (todis_duty_curve(2.0 * k - 1.0) - delta) / delta;
}

std::vector<GranularityRecord> sweep(std::span<const Protocol> protocols,
                                     std::span<const Rational> deltas,
                                     const SelectionOptions& options) {
    if (protocols.empty() || deltas.empty())
        throw std::invalid_argument("sweep needs at least one protocol and one duty cycle");
    std::vector<Rational> ordered(deltas.begin(), deltas.end());
    std::sort(ordered.begin(), ordered.end());

    std::vector<GranularityRecord> records;
    records.reserve(protocols.size() * ordered.size());
    for (Protocol protocol : protocols)
        for (const Rational& delta : ordered) {
            try {
                records.push_back(relative_error(protocol, delta, options));
            } catch (const std::exception& e) {
                records.push_back(GranularityRecord{delta, protocol, std::nullopt, Rational(0),
                                                    Rational(0), e.what()});
            }
        }
    return records;
}

std::vector<Rational> reciprocal_deltas(std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("reciprocal sweep needs K >= 1");
    std::vector<Rational> deltas;
    for (std::uint64_t j = 1; j <= k; ++j) deltas.emplace_back(1, j);
    return deltas;
}

std::vector<Rational> percent_deltas(std::uint64_t first, std::uint64_t last) {
    if (first == 0) throw std::invalid_argument("a 0% duty cycle has no relative error");
    if (first > last || last > 100) throw std::invalid_argument("percent range must lie in 1..100");
    std::vector<Rational> deltas;
    for (std::uint64_t j = first; j <= last; ++j) deltas.emplace_back(j, 100);
    return deltas;
}

}  // namespace ndisc
