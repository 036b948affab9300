// ndisc: neighbor-discovery schedule inspection, parameter selection,
// granularity sweeps, drift verification and latency experiments.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ndisc/granularity.hpp"
#include "ndisc/protocols.hpp"
#include "ndisc/report.hpp"
#include "ndisc/simulator.hpp"

namespace {

using namespace ndisc;

struct CommonOptions {
    std::string out;
    std::uint64_t seed = 1;
    std::uint64_t trials = 1000;
    std::string parity = "even";
    std::uint64_t searchlight_t = 2;
    std::string disco_pairing = "balanced";
    std::uint64_t prime_pool = 10'000;
};

SelectionOptions selection_options(const CommonOptions& o) {
    SelectionOptions s;
    s.hedis_parity = o.parity == "odd" ? Parity::Odd : Parity::Even;
    s.searchlight_t = o.searchlight_t;
    s.disco_pairing = o.disco_pairing == "any" ? DiscoPairing::Any : DiscoPairing::Balanced;
    s.prime_pool_limit = o.prime_pool;
    return s;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file << content;
}

int cmd_schedule(const std::string& notation, std::uint64_t limit, const CommonOptions& o) {
    const ProtocolParams params = parse_params(notation);
    const Schedule s = build_schedule(params);
    const Rational duty = s.duty_cycle();
    std::string out;
    out += "params: " + to_string(params) + "\n";
    out += "period: " + std::to_string(s.period()) + "\n";
    out += "duty_cycle: " + to_fraction_string(duty) + " (" +
           to_decimal_string(duty * 100) + "%)\n";
    const std::uint64_t shown = limit == 0 ? s.period() : limit;
    out += "active:";
    std::string sep = " ";
    for (std::uint64_t base = 0; base < shown; base += s.period()) {
        for (Slot slot : s.active()) {
            if (base + slot >= shown) break;
            out += sep + std::to_string(base + slot);
            sep = ",";
        }
    }
    out += "\n";
    write_output(o.out, out);
    return 0;
}

int cmd_params(const std::string& protocol, const std::string& delta_text, const CommonOptions& o) {
    const Rational delta = parse_rational(delta_text);
    const auto record = relative_error(parse_protocol(protocol), delta, selection_options(o));
    std::string out;
    out += "params: " + to_string(*record.params) + "\n";
    out += "desired: " + to_fraction_string(delta) + " (" + to_decimal_string(delta) + ")\n";
    out += "achieved: " + to_fraction_string(record.achieved_delta) + " (" +
           to_decimal_string(record.achieved_delta) + ")\n";
    out += "relative_error: " + to_decimal_string(record.relative_error) + "\n";
    out += "period: " + to_string(schedule_period(*record.params)) + "\n";
    write_output(o.out, out);
    return 0;
}

int cmd_granularity(const std::string& sweep_text, const std::string& protocols_text,
                    const RunMetadata& meta, const CommonOptions& o) {
    const auto deltas = parse_sweep(sweep_text);
    const auto protocols = parse_protocol_list(protocols_text);
    const auto records = sweep(protocols, deltas, selection_options(o));
    write_output(o.out, granularity_csv(records, meta, true));
    for (const auto& r : records)
        if (!r.ok()) return 1;
    return 0;
}

// Accepts protocol notation or a literal "period=T active=a,b,...".
Schedule schedule_from_text(const std::string& text) {
    if (text.starts_with("period=")) return parse_schedule(text);
    return build_schedule(parse_params(text));
}

int cmd_verify(const std::string& a_text, const std::string& b_text, std::uint64_t samples,
               const CommonOptions& o) {
    const Schedule a = schedule_from_text(a_text);
    const Schedule b = schedule_from_text(b_text);
    VerifyOptions options;
    options.allow_sampling = samples > 0;
    options.samples = samples;
    options.seed = o.seed;
    const VerifyReport report = verify_all_drifts(a, b, options);
    std::string out;
    out += "hyperperiod: " + std::to_string(hyperperiod(a, b)) + "\n";
    out += std::string("mode: ") + (report.sampled ? "sampled" : "exhaustive") + "\n";
    out += "drifts_checked: " + std::to_string(report.drifts_checked) + "\n";
    out += "failing_drifts: " + std::to_string(report.failing_drifts) + "\n";
    out += std::string("all_discover: ") + (report.all_discover ? "true" : "false") + "\n";
    out += "max_latency: " + std::to_string(report.max_latency) + "\n";
    char mean[64];
    std::snprintf(mean, sizeof mean, "%.6f", report.mean_latency);
    out += std::string("mean_latency: ") + mean + "\n";
    write_output(o.out, out);
    return report.all_discover ? 0 : 2;
}

int cmd_simulate(const std::string& protocols_text, const std::string& delta_a_text,
                 const std::string& delta_b_text, unsigned threads, const RunMetadata& meta,
                 const CommonOptions& o) {
    const Rational delta_a = parse_rational(delta_a_text);
    const Rational delta_b = parse_rational(delta_b_text);
    const auto protocols = parse_protocol_list(protocols_text);
    const auto options = selection_options(o);
    const std::filesystem::path dir = o.out.empty() ? "." : o.out;
    std::filesystem::create_directories(dir);

    int status = 0;
    for (Protocol protocol : protocols) {
        const NodeConfig a = select_params(protocol, delta_a, options);
        const NodeConfig b = select_params(protocol, delta_b, options);
        const auto dist = latency_trials(a, b, o.trials, o.seed, threads);
        const std::string stem(protocol_name(protocol));
        write_output((dir / (stem + "_trials.csv")).string(), trials_csv(dist, meta));
        write_output((dir / (stem + "_cdf.csv")).string(), cdf_csv(dist, meta));
        std::cout << simulation_summary(protocol, a, b, dist) << "\n";
        if (dist.undiscovered_count != 0) status = 1;
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic asynchronous neighbor-discovery toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ndisc::kVersion));

    CommonOptions common;
    auto add_selection = [&](CLI::App* sub) {
        sub->add_option("--parity", common.parity, "Hedis parameter parity")
            ->check(CLI::IsMember({"even", "odd"}));
        sub->add_option("--searchlight-t", common.searchlight_t, "Searchlight base t")
            ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 16));
        sub->add_option("--disco-pairing", common.disco_pairing, "Disco prime pairs")
            ->check(CLI::IsMember({"balanced", "any"}));
        sub->add_option("--prime-pool", common.prime_pool, "Largest prime for Disco/U-Connect")
            ->check(CLI::Range(std::uint64_t{3}, std::uint64_t{100'000'000}));
    };

    std::string notation;
    std::uint64_t limit = 0;
    auto* schedule = app.add_subcommand("schedule", "Print a protocol schedule");
    schedule->add_option("params", notation, "e.g. hedis:n=4")->required();
    schedule->add_option("--limit", limit, "List active slots below this index (default: one period)");
    schedule->add_option("--out", common.out, "Output path");

    std::string protocol, delta_text;
    auto* params = app.add_subcommand("params", "Select parameters for a duty cycle");
    params->add_option("--protocol", protocol)->required();
    params->add_option("--delta", delta_text, "e.g. 0.05, 5% or 1/20")->required();
    params->add_option("--out", common.out, "Output path");
    add_selection(params);

    std::string sweep_text, protocols_text = "all";
    auto* granularity = app.add_subcommand("granularity", "Relative-error sweep as CSV");
    granularity->add_option("--sweep", sweep_text, "reciprocal:<K> | percent:<a>..<b> | list:<v,...>")
        ->required();
    granularity->add_option("--protocols", protocols_text, "all or comma separated names");
    granularity->add_option("--out", common.out, "Output path");
    granularity->add_option("--seed", common.seed, "Recorded in the metadata header");
    add_selection(granularity);

    std::string a_text, b_text;
    std::uint64_t samples = 0;
    auto* verify = app.add_subcommand("verify", "Check discovery under every drift");
    verify->add_option("a", a_text)->required();
    verify->add_option("b", b_text)->required();
    verify->add_option("--sample", samples, "Sample this many drifts when the scan is too large");
    verify->add_option("--seed", common.seed);
    verify->add_option("--out", common.out, "Output path");

    std::string delta_a, delta_b;
    unsigned threads = 0;
    auto* simulate = app.add_subcommand("simulate", "Latency trials and CDFs as CSV");
    simulate->add_option("--protocols", protocols_text, "all or comma separated names");
    simulate->add_option("--delta-a", delta_a, "Duty cycle of node a")->required();
    simulate->add_option("--delta-b", delta_b, "Duty cycle of node b")->required();
    simulate->add_option("--trials", common.trials)->check(CLI::PositiveNumber);
    simulate->add_option("--seed", common.seed);
    simulate->add_option("--threads", threads, "Worker threads (0 = all cores)");
    simulate->add_option("--out", common.out, "Output directory");
    add_selection(simulate);

    CLI11_PARSE(app, argc, argv);

    ndisc::RunMetadata meta;
    for (int i = 0; i < argc; ++i) {
        if (i) meta.command_line += ' ';
        meta.command_line += i == 0 ? std::string("ndisc") : std::string(argv[i]);
    }
    meta.seed = common.seed;

    try {
        if (*schedule) return cmd_schedule(notation, limit, common);
        if (*params) return cmd_params(protocol, delta_text, common);
        if (*granularity) return cmd_granularity(sweep_text, protocols_text, meta, common);
        if (*verify) return cmd_verify(a_text, b_text, samples, common);
        if (*simulate)
            return cmd_simulate(protocols_text, delta_a, delta_b, threads, meta, common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
