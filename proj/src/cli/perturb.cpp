#include "commands.hpp"

#include "synthts/perturb.hpp"

#include <ostream>

namespace synthts::cli {

namespace {

AuditParams parse_audit(const json& c, std::string& reference, const std::string& default_reference) {
    AuditParams p;
    const json section = c.value("audit", json::object());
    check_keys(section, "audit", {"reference", "chunk_length", "below_fraction", "above_fraction", "autocorr_lag"});
    reference = get_string(section, "reference", "audit", default_reference);
    p.chunk_length = get_count(section, "chunk_length", "audit", p.chunk_length);
    p.below_fraction = get_number(section, "below_fraction", "audit", p.below_fraction);
    p.above_fraction = get_number(section, "above_fraction", "audit", p.above_fraction);
    p.autocorr_lag = get_count(section, "autocorr_lag", "audit", p.autocorr_lag);
    return p;
}

std::string percent_label(double fraction) { return format_value(100.0 * fraction) + "%"; }

// Rows of the original-versus-altered comparison table.
json audit_table(const AuditReport& r, const AuditParams& p) {
    const auto row = [](const std::string& name, const json& original, const json& altered) {
        return json{{"description", name}, {"original", original}, {"altered", altered}};
    };
    const auto& s = r.source;
    const auto& a = r.altered;
    return json::array({
        row("Min", s.min, a.min),
        row("First Quartile", s.q1, a.q1),
        row("Median", s.median, a.median),
        row("Third Quartile", s.q3, a.q3),
        row("Max", s.max, a.max),
        row("Mean", s.mean, a.mean),
        row("Standard Dev.", s.std, a.std),
        row("Coeff. of Var.", s.coeff_of_variation, a.coeff_of_variation),
        row("Autocorr. Lag: " + std::to_string(p.autocorr_lag), s.autocorr, a.autocorr),
        row("Days Below " + percent_label(1.0 - p.below_fraction), 0, r.below.count),
        row("Days Above " + percent_label(1.0 + p.above_fraction), 0, r.above.count),
    });
}

}  // namespace

void cmd_perturb(const RunContext& ctx, std::ostream& out) {
    const auto& c = ctx.config;
    check_keys(c, "config", {"mode", "input", "distribution", "clamp", "high", "low", "alpha", "delta_nonneg",
                             "result_nonneg", "audit", "seed", "threads", "output"});
    const auto mode = get_string(c, "mode", "config");

    json inputs = json::array();
    json run_seed = nullptr;
    std::optional<AlteredSeries> altered;
    std::optional<HourlySeries> reference_series;
    std::string reference;
    AuditParams audit;

    if (mode == "incremental") {
        const auto input = parse_input(ctx, require(c, "input", "config"), "source");
        const auto dist = [&] {
            try {
                return offset_distribution_from_json(require(c, "distribution", "config"));
            } catch (const json::exception& e) {
                config_error(std::string("distribution: ") + e.what());
            }
        }();
        ClampPolicy clamp;
        const json clamp_section = c.value("clamp", json::object());
        check_keys(clamp_section, "clamp", {"alpha_max", "alpha_min"});
        clamp.alpha_max = get_number(clamp_section, "alpha_max", "clamp", clamp.alpha_max);
        clamp.alpha_min = get_number(clamp_section, "alpha_min", "clamp", clamp.alpha_min);
        audit = parse_audit(c, reference, "input");
        if (reference != "input") config_error("audit.reference must be \"input\" for incremental mode");

        const auto seed = require_seed(ctx);
        run_seed = seed;
        auto source = load_input(input);
        altered = incremental_select(source, dist, clamp, seed);
        reference_series = std::move(source);
        inputs.push_back(input_record(input));
    } else if (mode == "altered_difference") {
        const auto high = parse_input(ctx, require(c, "high", "config"), "high");
        const auto low = parse_input(ctx, require(c, "low", "config"), "low");
        const double alpha = get_number(c, "alpha", "config");
        const bool delta_nonneg = get_bool(c, "delta_nonneg", "config", false);
        const bool result_nonneg = get_bool(c, "result_nonneg", "config", false);
        audit = parse_audit(c, reference, "high");
        if (reference != "high" && reference != "low") {
            config_error("audit.reference must be \"high\" or \"low\" for altered_difference mode");
        }

        auto high_series = load_input(high);
        auto low_series = load_input(low);
        altered = altered_difference(high_series, low_series, alpha, delta_nonneg, result_nonneg);
        reference_series = reference == "high" ? std::move(high_series) : std::move(low_series);
        inputs.push_back(input_record(high));
        inputs.push_back(input_record(low));
    } else {
        config_error("mode must be \"incremental\" or \"altered_difference\", got \"" + mode + "\"");
    }

    const auto report = direction_audit(altered->values, *reference_series, audit);

    prepare_output(ctx.output);
    write_csv(ctx.output / "altered.csv", altered->values);
    write_json(ctx.output / "audit.json", {{"reference", reference},
                                           {"chunk_length", audit.chunk_length},
                                           {"below_fraction", audit.below_fraction},
                                           {"above_fraction", audit.above_fraction},
                                           {"report", to_json(report)},
                                           {"table", audit_table(report, audit)}});
    write_json(ctx.output / "manifest.json", {{"format", kRunFormat},
                                              {"command", "perturb"},
                                              {"config", recorded_config(ctx)},
                                              {"seed", run_seed},
                                              {"inputs", inputs},
                                              {"provenance", altered->provenance},
                                              {"outputs", {{"altered.csv", checksum(altered->values)}}}});
    out << "wrote " << mode << " perturbation to " << (ctx.output / "altered.csv").string() << '\n';
}

}  // namespace synthts::cli
