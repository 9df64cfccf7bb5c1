#pragma once

#include "synthts/error.hpp"
#include "synthts/series.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace synthts::cli {

namespace fs = std::filesystem;
using nlohmann::json;

inline constexpr const char* kRunFormat = "synthts-run/1";

// Settings shared by every subcommand after command-line overrides are applied.
struct RunContext {
    json config;              // the document as written plus overrides
    fs::path base_dir;        // relative paths in the config resolve against this
    std::optional<std::uint64_t> seed;
    std::size_t threads = 0;  // 0: one per hardware thread
    fs::path output;
};

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> replicates;
    std::optional<std::size_t> threads;
    std::optional<std::size_t> chunk_length;
    std::optional<std::string> output;
};

RunContext load_run(const fs::path& config_path, const Overrides& overrides);

[[noreturn]] void config_error(const std::string& message);

void check_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed);
const json& require(const json& obj, std::string_view key, std::string_view where);

template <class T>
T get_as(const json& value, std::string_view where) {
    try {
        return value.get<T>();
    } catch (const json::exception&) {
        config_error(std::string(where) + " has the wrong type (" + value.type_name() + ")");
    }
}

double get_number(const json& obj, std::string_view key, std::string_view where, std::optional<double> fallback = {});
std::size_t get_count(const json& obj, std::string_view key, std::string_view where,
                      std::optional<std::size_t> fallback = {});
bool get_bool(const json& obj, std::string_view key, std::string_view where, bool fallback);
std::string get_string(const json& obj, std::string_view key, std::string_view where,
                       std::optional<std::string> fallback = {});

std::uint64_t require_seed(const RunContext& ctx);

fs::path resolve(const RunContext& ctx, const std::string& path);

// An input series: either a path string or {path, column, timestamp_column, label, non_negative}.
struct InputSpec {
    std::string role;
    std::string written_path;
    fs::path path;
    CsvOptions options;
};

InputSpec parse_input(const RunContext& ctx, const json& spec, std::string role, bool default_non_negative = true);
HourlySeries load_input(const InputSpec& input);
// {role, path as written, sha256 of the file bytes}
json input_record(const InputSpec& input);
json directory_record(const std::string& role, const std::string& written_path, const fs::path& dir);

// The config as recorded in manifests. `threads` is dropped so outputs do not depend on it.
json recorded_config(const RunContext& ctx);

void write_json(const fs::path& path, const json& doc);
void prepare_output(const fs::path& dir);

}  // namespace synthts::cli
