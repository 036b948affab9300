#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ndisc/granularity.hpp"
#include "ndisc/protocols.hpp"
#include "ndisc/simulator.hpp"

namespace ndisc {

inline constexpr std::string_view kVersion = "0.1.0";

/// Leading `#` comment lines written at the top of every output file.
struct RunMetadata {
    std::string command_line;
    std::uint64_t seed = 0;
};

std::string metadata_block(const RunMetadata& meta);

/// `reciprocal:<K>`, `percent:<a>..<b>` or `list:<comma separated values>`.
/// Throws std::invalid_argument naming the offending token.
std::vector<Rational> parse_sweep(std::string_view text);

/// `all` or a comma separated list of protocol names.
std::vector<Protocol> parse_protocol_list(std::string_view text);

/// Header `protocol,desired_delta,achieved_delta,relative_error,params[,todis_bound]`.
std::string granularity_csv(const std::vector<GranularityRecord>& records,
                            const RunMetadata& meta, bool with_todis_bound);

/// Header `trial,drift,latency,discovered`.
std::string trials_csv(const LatencyDistribution& dist, const RunMetadata& meta);

/// Header `latency,fraction`, one row per distinct observed latency.
std::string cdf_csv(const LatencyDistribution& dist, const RunMetadata& meta);

/// Simulation summary line: parameters chosen for both nodes and latency stats.
std::string simulation_summary(Protocol protocol, const NodeConfig& a, const NodeConfig& b,
                               const LatencyDistribution& dist);

}  // namespace ndisc
