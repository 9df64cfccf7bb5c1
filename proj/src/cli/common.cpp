#include "common.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace synthts::cli {

void config_error(const std::string& message) { throw Error(ErrorKind::Config, message); }

void check_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) config_error(std::string(where) + " must be an object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (auto a : allowed) known = known || item.key() == a;
        if (!known) config_error("unknown key '" + item.key() + "' in " + std::string(where));
    }
}

const json& require(const json& obj, std::string_view key, std::string_view where) {
    const auto it = obj.find(std::string(key));
    if (it == obj.end() || it->is_null()) config_error(std::string(where) + ": missing required key '" + std::string(key) + "'");
    return *it;
}

double get_number(const json& obj, std::string_view key, std::string_view where, std::optional<double> fallback) {
    const auto it = obj.find(std::string(key));
    if (it == obj.end() || it->is_null()) {
        if (!fallback) config_error(std::string(where) + ": missing required key '" + std::string(key) + "'");
        return *fallback;
    }
    if (!it->is_number()) config_error(std::string(where) + "." + std::string(key) + " must be a number");
    const double v = it->get<double>();
    if (!std::isfinite(v)) config_error(std::string(where) + "." + std::string(key) + " must be finite");
    return v;
}

std::size_t get_count(const json& obj, std::string_view key, std::string_view where,
                      std::optional<std::size_t> fallback) {
    const auto it = obj.find(std::string(key));
    if (it == obj.end() || it->is_null()) {
        if (!fallback) config_error(std::string(where) + ": missing required key '" + std::string(key) + "'");
        return *fallback;
    }
    if (!it->is_number_unsigned()) {
        config_error(std::string(where) + "." + std::string(key) + " must be a non-negative integer");
    }
    return it->get<std::size_t>();
}

bool get_bool(const json& obj, std::string_view key, std::string_view where, bool fallback) {
    const auto it = obj.find(std::string(key));
    if (it == obj.end() || it->is_null()) return fallback;
    if (!it->is_boolean()) config_error(std::string(where) + "." + std::string(key) + " must be true or false");
    return it->get<bool>();
}

std::string get_string(const json& obj, std::string_view key, std::string_view where,
                       std::optional<std::string> fallback) {
    const auto it = obj.find(std::string(key));
    if (it == obj.end() || it->is_null()) {
        if (!fallback) config_error(std::string(where) + ": missing required key '" + std::string(key) + "'");
        return *fallback;
    }
    if (!it->is_string()) config_error(std::string(where) + "." + std::string(key) + " must be a string");
    return it->get<std::string>();
}

RunContext load_run(const fs::path& config_path, const Overrides& overrides) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open config file " + config_path.string());

    RunContext ctx;
    try {
        ctx.config = json::parse(in);
    } catch (const json::parse_error& e) {
        config_error("config " + config_path.string() + " is not valid JSON: " + e.what());
    }
    if (!ctx.config.is_object()) config_error("config " + config_path.string() + " must be a JSON object");
    ctx.base_dir = config_path.has_parent_path() ? config_path.parent_path() : fs::path(".");

    // Flags win over config scalars; the overridden values are what gets recorded.
    auto& c = ctx.config;
    if (overrides.seed) c["seed"] = *overrides.seed;
    if (overrides.replicates) c["replicates"] = *overrides.replicates;
    if (overrides.threads) c["threads"] = *overrides.threads;
    if (overrides.chunk_length) c["chunk_length"] = *overrides.chunk_length;
    if (overrides.output) c["output"] = *overrides.output;

    if (const auto it = c.find("seed"); it != c.end() && !it->is_null()) {
        if (!it->is_number_unsigned()) config_error("seed must be an integer in [0, 2^64)");
        ctx.seed = it->get<std::uint64_t>();
    }
    ctx.threads = get_count(c, "threads", "config", 0);
    ctx.output = overrides.output ? fs::path(*overrides.output) : resolve(ctx, get_string(c, "output", "config"));
    return ctx;
}

std::uint64_t require_seed(const RunContext& ctx) {
    if (!ctx.seed) config_error("a seed is required: set \"seed\" in the config or pass --seed");
    return *ctx.seed;
}

fs::path resolve(const RunContext& ctx, const std::string& path) {
    const fs::path p(path);
    return p.is_absolute() ? p : ctx.base_dir / p;
}

InputSpec parse_input(const RunContext& ctx, const json& spec, std::string role, bool default_non_negative) {
    InputSpec input;
    input.role = std::move(role);
    input.options.non_negative = default_non_negative;
    if (spec.is_string()) {
        input.written_path = spec.get<std::string>();
    } else if (spec.is_object()) {
        const std::string where = "input '" + input.role + "'";
        check_keys(spec, where, {"path", "column", "timestamp_column", "label", "non_negative"});
        input.written_path = get_string(spec, "path", where);
        input.options.value_column = get_string(spec, "column", where, "value");
        if (spec.contains("timestamp_column")) input.options.timestamp_column = get_string(spec, "timestamp_column", where);
        input.options.label = get_string(spec, "label", where, "");
        input.options.non_negative = get_bool(spec, "non_negative", where, default_non_negative);
    } else {
        config_error("input '" + input.role + "' must be a path or an object with a \"path\" key");
    }
    input.path = resolve(ctx, input.written_path);
    if (!fs::is_regular_file(input.path)) {
        throw Error(ErrorKind::Io, "input '" + input.role + "' not found: " + input.path.string());
    }
    return input;
}

HourlySeries load_input(const InputSpec& input) { return load_csv(input.path, input.options); }

json input_record(const InputSpec& input) {
    return {{"role", input.role}, {"path", input.written_path}, {"sha256", file_checksum(input.path)}};
}

json directory_record(const std::string& role, const std::string& written_path, const fs::path& dir) {
    const auto manifest = dir / "manifest.json";
    if (!fs::is_regular_file(manifest)) {
        throw Error(ErrorKind::Io, "ensemble '" + role + "' has no manifest.json: " + dir.string());
    }
    return {{"role", role}, {"path", written_path}, {"manifest_sha256", file_checksum(manifest)}};
}

json recorded_config(const RunContext& ctx) {
    json c = ctx.config;
    c.erase("threads");
    return c;
}

void write_json(const fs::path& path, const json& doc) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << doc.dump(2) << '\n';
    if (!out) throw Error(ErrorKind::Io, "error writing " + path.string());
}

void prepare_output(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw Error(ErrorKind::Io, "cannot create output directory " + dir.string());
}

}  // namespace synthts::cli
