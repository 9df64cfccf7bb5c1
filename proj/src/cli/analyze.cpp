#include "commands.hpp"

#include "synthts/ensemble.hpp"
#include "synthts/stats.hpp"

#include <ostream>

namespace synthts::cli {

namespace {

Threshold parse_threshold(const json& c, const char* key) {
    const auto it = c.find(key);
    if (it == c.end() || it->is_null()) return Threshold::proportional(0.05);
    try {
        return threshold_from_json(*it);
    } catch (const json::exception& e) {
        config_error(std::string(key) + ": " + e.what());
    }
}

std::vector<double> counts_of(const std::vector<ExceedanceResult>& results) {
    std::vector<double> out;
    out.reserve(results.size());
    for (const auto& r : results) out.push_back(static_cast<double>(r.count));
    return out;
}

}  // namespace

void cmd_analyze(const RunContext& ctx, std::ostream& out) {
    const auto& c = ctx.config;
    check_keys(c, "config", {"original", "ensemble", "chunk_length", "autocorr_lag", "underage_threshold",
                             "overage_threshold", "seed", "threads", "output"});
    const auto original_input = parse_input(ctx, require(c, "original", "config"), "original");
    const auto ensemble_path = get_string(c, "ensemble", "config");
    const auto ensemble_dir = resolve(ctx, ensemble_path);
    const auto chunk_length = get_count(c, "chunk_length", "config", 24);
    const auto lag = get_count(c, "autocorr_lag", "config", 24);
    const auto under = parse_threshold(c, "underage_threshold");
    const auto over = parse_threshold(c, "overage_threshold");

    const json inputs = json::array({input_record(original_input), directory_record("ensemble", ensemble_path, ensemble_dir)});
    const auto original = load_input(original_input);
    const auto ens = read_ensemble(ensemble_dir);

    const auto table = ensemble_summary_table(ens.series, original, lag, ctx.threads);
    const auto report = exceedance_report(ens.series, original, chunk_length, under, over, ctx.threads);

    prepare_output(ctx.output);
    write_summary_table_csv(ctx.output / "summary_table.csv", table);
    write_json(ctx.output / "exceedance.json", to_json(report));
    write_histogram_csv(ctx.output / "underage_histogram.csv", integer_histogram(counts_of(report.underage)));
    write_histogram_csv(ctx.output / "overage_histogram.csv", integer_histogram(counts_of(report.overage)));
    write_json(ctx.output / "manifest.json", {{"format", kRunFormat},
                                              {"command", "analyze"},
                                              {"config", recorded_config(ctx)},
                                              {"inputs", inputs},
                                              {"replicates", ens.size()}});
    out << "analysed " << ens.size() << " series against " << original_input.written_path << " (l = " << chunk_length
        << ")\n";
}

}  // namespace synthts::cli
