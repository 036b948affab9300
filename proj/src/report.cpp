#include "ndisc/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ndisc {

std::string metadata_block(const RunMetadata& meta) {
    std::string out;
    out += "# command: " + meta.command_line + "\n";
    out += "# seed: " + std::to_string(meta.seed) + "\n";
    out += "# version: ndisc " + std::string(kVersion) + "\n";
    return out;
}

namespace {

std::uint64_t parse_count(std::string_view token, std::string_view context) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw std::invalid_argument("invalid integer '" + std::string(token) + "' in sweep '" +
                                    std::string(context) + "'");
    return value;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

}  // namespace

std::vector<Rational> parse_sweep(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("sweep '" + std::string(text) +
                                    "' must be reciprocal:<K>, percent:<a>..<b> or list:<values>");
    const auto kind = text.substr(0, colon);
    const auto body = text.substr(colon + 1);
    if (kind == "reciprocal") return reciprocal_deltas(parse_count(body, text));
    if (kind == "percent") {
        const auto dots = body.find("..");
        if (dots == std::string_view::npos)
            throw std::invalid_argument("percent sweep '" + std::string(body) + "' needs <a>..<b>");
        return percent_deltas(parse_count(body.substr(0, dots), text),
                              parse_count(body.substr(dots + 2), text));
    }
    if (kind == "list") {
        std::vector<Rational> deltas;
        auto rest = body;
        while (true) {
            const auto comma = rest.find(',');
            deltas.push_back(parse_rational(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return deltas;
    }
    throw std::invalid_argument("unknown sweep kind '" + std::string(kind) + "'");
}

std::vector<Protocol> parse_protocol_list(std::string_view text) {
    if (text == "all") return {std::begin(kAllProtocols), std::end(kAllProtocols)};
    std::vector<Protocol> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_protocol(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::string granularity_csv(const std::vector<GranularityRecord>& records,
                            const RunMetadata& meta, bool with_todis_bound) {
    std::string out = metadata_block(meta);
    out += "protocol,desired_delta,achieved_delta,relative_error,params";
    if (with_todis_bound) out += ",todis_bound";
    out += '\n';
    for (const auto& r : records) {
        out += protocol_name(r.protocol);
        out += ',' + to_decimal_string(r.desired_delta);
        if (r.ok()) {
            out += ',' + to_decimal_string(r.achieved_delta);
            out += ',' + to_decimal_string(r.relative_error);
            out += ",\"" + to_string(*r.params) + '"';
        } else {
            out += ",,,\"error: " + r.error + '"';
        }
        if (with_todis_bound) {
            out += ',';
            const double delta = to_double(r.desired_delta);
            if (delta > 0.0 && delta < 1.0) out += format_double(todis_error_upper_bound(delta));
        }
        out += '\n';
    }
    return out;
}

std::string trials_csv(const LatencyDistribution& dist, const RunMetadata& meta) {
    std::string out = metadata_block(meta);
    out += "trial,drift,latency,discovered\n";
    for (const auto& t : dist.trials) {
        out += std::to_string(t.trial) + ',' + std::to_string(t.drift) + ',';
        if (t.discovered) out += std::to_string(t.latency);
        out += t.discovered ? ",1\n" : ",0\n";
    }
    return out;
}

std::string cdf_csv(const LatencyDistribution& dist, const RunMetadata& meta) {
    std::string out = metadata_block(meta);
    out += "latency,fraction\n";
    const auto steps = cdf_steps(dist);
    for (const auto& [latency, fraction] : cdf(dist, steps))
        out += std::to_string(latency) + ',' + format_double(fraction) + '\n';
    return out;
}

std::string simulation_summary(Protocol protocol, const NodeConfig& a, const NodeConfig& b,
                               const LatencyDistribution& dist) {
    std::ostringstream os;
    os << protocol_name(protocol) << " (" << to_string(a.params) << " | " << to_string(b.params)
       << "): achieved " << to_decimal_string(a.achieved_delta) << " / "
       << to_decimal_string(b.achieved_delta) << ", trials " << dist.trial_count
       << ", undiscovered " << dist.undiscovered_count;
    if (!dist.latencies.empty()) {
        const auto& lat = dist.latencies;
        os << ", latency p50 " << lat[(lat.size() - 1) / 2] << " p90 "
           << lat[(lat.size() - 1) * 9 / 10] << " max " << lat.back();
    }
    return os.str();
}

}  // namespace ndisc
