#include "commands.hpp"

#include "synthts/nnlb.hpp"
#include "synthts/sbb.hpp"

#include <ostream>

namespace synthts::cli {

namespace {

KernelKind parse_kernel(const json& section, std::string_view where, KernelKind fallback) {
    const auto name = get_string(section, "kernel", where, std::string(to_string(fallback)));
    try {
        return kernel_from_string(name);
    } catch (const Error& e) {
        config_error(std::string(where) + ".kernel: " + e.what());
    }
}

NnlbConfig parse_nnlb(const json& c) {
    NnlbConfig cfg;
    const json section = c.value("nnlb", json::object());
    check_keys(section, "nnlb", {"lag", "neighbors", "include_self", "kernel"});
    cfg.lag = get_count(section, "lag", "nnlb", cfg.lag);
    cfg.neighbors = get_count(section, "neighbors", "nnlb", cfg.neighbors);
    cfg.include_self = get_bool(section, "include_self", "nnlb", cfg.include_self);
    cfg.kernel = parse_kernel(section, "nnlb", cfg.kernel);
    return cfg;
}

SbbConfig parse_sbb(const json& c) {
    SbbConfig cfg;
    const json section = c.value("sbb", json::object());
    check_keys(section, "sbb", {"sash", "pool_size", "include_self", "kernel"});
    cfg.sash = get_count(section, "sash", "sbb", cfg.sash);
    cfg.pool_size = get_count(section, "pool_size", "sbb", cfg.pool_size);
    cfg.include_self = get_bool(section, "include_self", "sbb", cfg.include_self);
    cfg.kernel = parse_kernel(section, "sbb", cfg.kernel);
    return cfg;
}

}  // namespace

void cmd_generate(const RunContext& ctx, std::ostream& out) {
    const auto& c = ctx.config;
    check_keys(c, "config", {"input", "method", "nnlb", "sbb", "replicates", "seed", "threads", "output"});
    const auto input = parse_input(ctx, require(c, "input", "config"), "source");
    const auto method = get_string(c, "method", "config");
    const auto replicates = get_count(c, "replicates", "config");
    if (replicates == 0) config_error("replicates must be >= 1");
    const auto seed = require_seed(ctx);

    Ensemble ens;
    if (method == "nnlb") {
        const auto cfg = parse_nnlb(c);
        ens = generate_nnlb_batch(load_input(input), cfg, replicates, seed, ctx.threads);
    } else if (method == "sbb") {
        const auto cfg = parse_sbb(c);
        ens = generate_sbb_batch(load_input(input), cfg, replicates, seed, ctx.threads);
    } else {
        config_error("method must be \"nnlb\" or \"sbb\", got \"" + method + "\"");
    }

    ens.config = {{"generator", ens.config}, {"run", recorded_config(ctx)}, {"inputs", json::array({input_record(input)})}};
    prepare_output(ctx.output);
    write_ensemble(ctx.output, ens);
    out << "wrote " << ens.size() << " " << method << " series to " << ctx.output.string() << '\n';
}

}  // namespace synthts::cli
