#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ndisc/protocols.hpp"
#include "ndisc/rational.hpp"

namespace ndisc {

struct GranularityRecord {
    Rational desired_delta;
    Protocol protocol;
    std::optional<ProtocolParams> params;  // empty when the cell failed
    Rational achieved_delta;
    Rational relative_error;  // |achieved − desired| / desired
    std::string error;        // non-empty when the cell failed

    bool ok() const noexcept { return error.empty(); }
};

/// Best approximation of `delta` by `protocol` and its exact relative error.
/// Propagates choose_params() errors.
GranularityRecord relative_error(Protocol protocol, const Rational& delta,
                                 const SelectionOptions& options = {});

/// f(n) = 3(n²−n−1) / (n(n²−4)) over the reals.
double todis_duty_curve(double n);

/// The real k with (f(2k−1) + f(2k+1)) / 2 = delta, i.e. the largest real root of
/// 16δk⁴ − 24k³ + (12 − 40δ)k² + 36k + 9δ − 9.
double todis_bound_root(double delta);

/// Upper envelope of Todis' relative error: (f(2k(δ)−1) − δ) / δ.
/// Throws std::domain_error unless 0 < delta < 1.
double todis_error_upper_bound(double delta);

/// Protocol-major, then delta ascending. Per-cell failures are recorded in
/// the row's `error` field instead of aborting.
std::vector<GranularityRecord> sweep(std::span<const Protocol> protocols,
                                     std::span<const Rational> deltas,
                                     const SelectionOptions& options = {});

/// δ = 1, 1/2, …, 1/k.
std::vector<Rational> reciprocal_deltas(std::uint64_t k);
/// δ = a%, (a+1)%, …, b%. Throws std::invalid_argument when a = 0 or a > b or b > 100.
std::vector<Rational> percent_deltas(std::uint64_t first, std::uint64_t last);

}  // namespace ndisc
