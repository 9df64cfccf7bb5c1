#include "commands.hpp"

#include "synthts/ensemble.hpp"
#include "synthts/vre.hpp"

#include <ostream>

namespace synthts::cli {

namespace {

VreWeights parse_weights(const json& j, std::string_view where) {
    check_keys(j, where, {"solar", "wind"});
    VreWeights w{get_number(j, "solar", where), get_number(j, "wind", where)};
    try {
        w.validate();
    } catch (const Error& e) {
        config_error(std::string(where) + ": " + e.what());
    }
    return w;
}

WeightRange parse_range(const json& j, std::string_view where) {
    check_keys(j, where, {"start", "stop", "step"});
    return WeightRange{get_number(j, "start", where), get_number(j, "stop", where), get_number(j, "step", where, 1.0)};
}

json weights_json(const VreWeights& w) { return {{"solar", w.solar}, {"wind", w.wind}}; }

json entry_json(const SweepEntry& e) {
    json j = to_json(e.result);
    j["weights"] = weights_json(e.weights);
    return j;
}

}  // namespace

void cmd_vre(const RunContext& ctx, std::ostream& out) {
    const auto& c = ctx.config;
    check_keys(c, "config", {"solar", "wind", "nuclear", "load", "shortfall_fraction", "weights", "seasons", "sweep",
                             "ensemble", "seed", "threads", "output"});
    const auto solar_in = parse_input(ctx, require(c, "solar", "config"), "solar");
    const auto wind_in = parse_input(ctx, require(c, "wind", "config"), "wind");
    const auto nuclear_in = parse_input(ctx, require(c, "nuclear", "config"), "nuclear");
    const auto load_in = parse_input(ctx, require(c, "load", "config"), "load");
    const double fraction = get_number(c, "shortfall_fraction", "config", kDefaultShortfallFraction);

    const bool has_weights = c.contains("weights");
    const bool has_sweep = c.contains("sweep");
    const bool has_ensemble = c.contains("ensemble");
    if (!has_weights && !has_sweep && !has_ensemble) {
        config_error("vre needs at least one of \"weights\", \"sweep\" or \"ensemble\"");
    }
    std::optional<VreWeights> weights;
    if (has_weights) weights = parse_weights(c["weights"], "weights");

    json inputs = json::array({input_record(solar_in), input_record(wind_in), input_record(nuclear_in), input_record(load_in)});
    const auto solar = load_input(solar_in);
    const auto wind = load_input(wind_in);
    const auto nuclear = load_input(nuclear_in);
    const auto load = load_input(load_in);

    prepare_output(ctx.output);
    json adequacy_doc = {{"shortfall_fraction", fraction}};
    json seed_record = nullptr;

    if (weights) {
        const auto vre = combine_vre(solar, wind, *weights);
        adequacy_doc["weights"] = weights_json(*weights);
        adequacy_doc["original"] = to_json(adequacy(vre, nuclear, load, fraction));
        if (c.contains("seasons")) {
            const auto& seasons = c["seasons"];
            if (!seasons.is_array()) config_error("seasons must be an array");
            json results = json::array();
            for (const auto& s : seasons) {
                check_keys(s, "seasons[]", {"name", "start_hour", "duration_hours"});
                const auto start = get_count(s, "start_hour", "seasons[]");
                const auto duration = get_count(s, "duration_hours", "seasons[]");
                const auto r = seasonal_adequacy(vre, nuclear, load, start, duration, fraction);
                json j = to_json(r.result);
                j["name"] = get_string(s, "name", "seasons[]", "");
                j["start_hour"] = start;
                j["duration_hours"] = duration;
                results.push_back(std::move(j));
            }
            adequacy_doc["seasons"] = std::move(results);
        }
    } else if (c.contains("seasons")) {
        config_error("seasons need fixed \"weights\"");
    }

    if (has_sweep) {
        const auto& s = c["sweep"];
        check_keys(s, "sweep", {"curtailment_cap", "solar", "wind"});
        const double cap = get_number(s, "curtailment_cap", "sweep");
        const auto ws = parse_range(require(s, "solar", "sweep"), "sweep.solar");
        const auto ww = parse_range(require(s, "wind", "sweep"), "sweep.wind");
        const auto sweep = weight_sweep(solar, wind, nuclear, load, cap, ws, ww, fraction, ctx.threads);
        write_sweep_csv(ctx.output / "sweep.csv", sweep.all);
        write_sweep_csv(ctx.output / "sweep_ranked.csv", sweep.ranked);
        adequacy_doc["sweep"] = {{"curtailment_cap", cap},
                                 {"grid_points", sweep.all.size()},
                                 {"feasible", sweep.ranked.size()},
                                 {"best", sweep.ranked.empty() ? json(nullptr) : entry_json(sweep.ranked.front())}};
        if (!weights && !sweep.ranked.empty()) weights = sweep.ranked.front().weights;
    }

    if (has_ensemble) {
        const auto& e = c["ensemble"];
        check_keys(e, "ensemble", {"solar", "wind", "pairs", "weights"});
        if (e.contains("weights")) weights = parse_weights(e["weights"], "ensemble.weights");
        if (!weights) config_error("ensemble adequacy needs weights (ensemble.weights, weights, or a feasible sweep)");
        const auto solar_path = get_string(e, "solar", "ensemble");
        const auto wind_path = get_string(e, "wind", "ensemble");
        inputs.push_back(directory_record("solar_ensemble", solar_path, resolve(ctx, solar_path)));
        inputs.push_back(directory_record("wind_ensemble", wind_path, resolve(ctx, wind_path)));
        const auto pairs = get_count(e, "pairs", "ensemble", 0);
        const auto seed = require_seed(ctx);
        seed_record = seed;

        const auto solar_ens = read_ensemble(resolve(ctx, solar_path));
        const auto wind_ens = read_ensemble(resolve(ctx, wind_path));
        const auto result = ensemble_adequacy(solar_ens.series, wind_ens.series, nuclear, load, *weights, seed, pairs,
                                              fraction, ctx.threads);
        json doc = to_json(result);
        doc["weights"] = weights_json(*weights);
        doc["pairing_seed"] = seed;
        write_json(ctx.output / "ensemble_adequacy.json", doc);
        write_histogram_csv(ctx.output / "shortfall_histogram.csv", integer_histogram(result.shortfall_days.values));
    }

    write_json(ctx.output / "adequacy.json", adequacy_doc);
    write_json(ctx.output / "manifest.json", {{"format", kRunFormat},
                                              {"command", "vre"},
                                              {"config", recorded_config(ctx)},
                                              {"seed", seed_record},
                                              {"inputs", inputs}});
    out << "wrote case-study outputs to " << ctx.output.string() << '\n';
}

}  // namespace synthts::cli
