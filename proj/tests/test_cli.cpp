#include "doctest.h"

#include "support/fixtures.hpp"

#include "synthts/cli.hpp"
#include "synthts/ensemble.hpp"

#include "json.hpp"

#include <sstream>

using namespace synthts;
using namespace synthts::testing;
using nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "synthts");
    std::ostringstream out;
    std::ostringstream err;
    CliResult r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json read_json(const std::filesystem::path& p) { return json::parse(read_file(p)); }

void write_json_file(const std::filesystem::path& p, const json& j) { write_file(p, j.dump(2)); }

// Small fixture year: 20 days of each series written as CSV in `dir`.
void write_fixtures(const TempDir& dir, std::size_t hours = 24 * 20) {
    write_csv(dir / "solar.csv", synthetic_solar(hours));
    write_csv(dir / "wind.csv", synthetic_wind(hours));
    write_csv(dir / "load.csv", synthetic_load(hours));
    write_csv(dir / "nuclear.csv", synthetic_nuclear(hours));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and usage errors") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({}).code == cli::kConfig);
    CHECK(run_cli({"frobnicate"}).code == cli::kConfig);
    const auto r = run_cli({"generate"});
    CHECK(r.code == cli::kConfig);
    CHECK(r.err.find("--config") != std::string::npos);
}

TEST_CASE("exit code classes are distinct") {
    CHECK(cli::exit_code_for(ErrorKind::Config) == cli::kConfig);
    CHECK(cli::exit_code_for(ErrorKind::KTooLarge) == cli::kConfig);
    CHECK(cli::exit_code_for(ErrorKind::Io) == cli::kIo);
    CHECK(cli::exit_code_for(ErrorKind::UnparseableValue) == cli::kIo);
    CHECK(cli::exit_code_for(ErrorKind::LengthMismatch) == cli::kValidation);
    CHECK(cli::exit_code_for(ErrorKind::ZeroLoad) == cli::kValidation);
    CHECK(cli::kConfig != cli::kIo);
    CHECK(cli::kIo != cli::kValidation);
    CHECK(cli::kConfig != cli::kValidation);
}

TEST_CASE("generate is reproducible and records its config") {
    TempDir dir("cli_generate");
    write_fixtures(dir);
    const json config{{"input", "solar.csv"},
                      {"method", "sbb"},
                      {"sbb", {{"sash", 2}, {"pool_size", 20}}},
                      {"replicates", 2},
                      {"seed", 2021},
                      {"output", "ens"}};
    write_json_file(dir / "gen.json", config);

    REQUIRE(run_cli({"generate", "-c", (dir / "gen.json").string()}).code == 0);
    const auto manifest1 = read_file(dir / "ens" / "manifest.json");
    const auto series1 = read_file(dir / "ens" / "series_0001.csv");
    REQUIRE(run_cli({"generate", "-c", (dir / "gen.json").string(), "--threads", "3"}).code == 0);
    CHECK(read_file(dir / "ens" / "manifest.json") == manifest1);
    CHECK(read_file(dir / "ens" / "series_0001.csv") == series1);

    const auto m = read_json(dir / "ens" / "manifest.json");
    CHECK(m["method"] == "sbb");
    CHECK(m["master_seed"] == 2021);
    CHECK(m["replicates"] == 2);
    CHECK(m["config"]["run"] == config);
    CHECK(m["config"]["generator"]["pool_size"] == 20);
    CHECK(m["config"]["inputs"][0]["sha256"] == file_checksum(dir / "solar.csv"));

    const auto ens = read_ensemble(dir / "ens");
    CHECK(ens.size() == 2);
}

TEST_CASE("flags override config scalars") {
    TempDir dir("cli_override");
    write_fixtures(dir);
    write_json_file(dir / "gen.json", {{"input", "wind.csv"}, {"method", "nnlb"}, {"replicates", 1}, {"output", "a"}});
    const auto r = run_cli({"generate", "-c", (dir / "gen.json").string(), "--seed", "5", "-B", "3", "-o",
                            (dir / "b").string()});
    REQUIRE(r.code == 0);
    const auto m = read_json(dir / "b" / "manifest.json");
    CHECK(m["replicates"] == 3);
    CHECK(m["master_seed"] == 5);
    CHECK(m["config"]["run"]["seed"] == 5);
    CHECK_FALSE(std::filesystem::exists(dir / "a"));
}

TEST_CASE("generate errors") {
    TempDir dir("cli_generate_err");
    write_fixtures(dir, 48);
    write_json_file(dir / "noseed.json", {{"input", "wind.csv"}, {"method", "sbb"}, {"replicates", 1}, {"output", "o"}});
    auto r = run_cli({"generate", "-c", (dir / "noseed.json").string()});
    CHECK(r.code == cli::kConfig);
    CHECK(r.err.find("seed") != std::string::npos);

    write_json_file(dir / "bigk.json", {{"input", "wind.csv"},
                                        {"method", "nnlb"},
                                        {"nnlb", {{"lag", 5}, {"neighbors", 100}}},
                                        {"replicates", 1},
                                        {"seed", 1},
                                        {"output", "o"}});
    r = run_cli({"generate", "-c", (dir / "bigk.json").string()});
    CHECK(r.code == cli::kConfig);
    CHECK(r.err.find("k") != std::string::npos);

    write_json_file(dir / "nofile.json",
                    {{"input", "nope.csv"}, {"method", "sbb"}, {"replicates", 1}, {"seed", 1}, {"output", "o"}});
    CHECK(run_cli({"generate", "-c", (dir / "nofile.json").string()}).code == cli::kIo);

    write_json_file(dir / "typo.json",
                    {{"input", "wind.csv"}, {"method", "sbb"}, {"replicate", 1}, {"seed", 1}, {"output", "o"}});
    r = run_cli({"generate", "-c", (dir / "typo.json").string()});
    CHECK(r.code == cli::kConfig);
    CHECK(r.err.find("replicate") != std::string::npos);

    write_file(dir / "broken.json", "{ not json");
    CHECK(run_cli({"generate", "-c", (dir / "broken.json").string()}).code == cli::kConfig);
    CHECK(run_cli({"generate", "-c", (dir / "absent.json").string()}).code == cli::kIo);

    write_file(dir / "bad.csv", "value\n1\nx\n");
    write_json_file(dir / "badcsv.json",
                    {{"input", "bad.csv"}, {"method", "sbb"}, {"replicates", 1}, {"seed", 1}, {"output", "o"}});
    CHECK(run_cli({"generate", "-c", (dir / "badcsv.json").string()}).code == cli::kIo);
}

TEST_CASE("perturb incremental and chaining into generate") {
    TempDir dir("cli_perturb");
    write_fixtures(dir);
    write_json_file(dir / "p.json", {{"mode", "incremental"},
                                     {"input", "wind.csv"},
                                     {"distribution", {{"kind", "exponential"}, {"mean", 10}}},
                                     {"seed", 3},
                                     {"output", "alt"}});
    REQUIRE(run_cli({"perturb", "-c", (dir / "p.json").string()}).code == 0);
    const auto altered = load_csv(dir / "alt" / "altered.csv");
    CHECK(altered.size() == 24 * 20);
    const auto m = read_json(dir / "alt" / "manifest.json");
    CHECK(m["command"] == "perturb");
    CHECK(m["seed"] == 3);
    CHECK(m["inputs"][0]["sha256"] == file_checksum(dir / "wind.csv"));
    CHECK(m["outputs"]["altered.csv"] == checksum(altered));
    const auto audit = read_json(dir / "alt" / "audit.json");
    CHECK(audit["reference"] == "input");

    write_json_file(dir / "g.json", {{"input", "alt/altered.csv"},
                                     {"method", "sbb"},
                                     {"replicates", 2},
                                     {"seed", 4},
                                     {"output", "chained"}});
    CHECK(run_cli({"generate", "-c", (dir / "g.json").string()}).code == 0);

    write_json_file(dir / "bad.json", {{"mode", "incremental"},
                                       {"input", "wind.csv"},
                                       {"distribution", {{"kind", "normal"}, {"mean", 0}, {"std", -1}}},
                                       {"seed", 3},
                                       {"output", "x"}});
    CHECK(run_cli({"perturb", "-c", (dir / "bad.json").string()}).code == cli::kConfig);
}

TEST_CASE("perturb altered difference writes the comparison table") {
    TempDir dir("cli_altdiff");
    write_fixtures(dir);
    write_csv(dir / "low.csv", synthetic_wind(24 * 20, 77));
    write_json_file(dir / "a.json",
                    {{"mode", "altered_difference"}, {"high", "wind.csv"}, {"low", "low.csv"}, {"alpha", 0.5}, {"output", "ad"}});
    REQUIRE(run_cli({"perturb", "-c", (dir / "a.json").string()}).code == 0);
    const auto audit = read_json(dir / "ad" / "audit.json");
    CHECK(audit["reference"] == "high");
    const auto& table = audit["table"];
    REQUIRE(table.size() == 11);
    CHECK(table[0]["description"] == "Min");
    CHECK(table[7]["description"] == "Coeff. of Var.");
    CHECK(table[8]["description"] == "Autocorr. Lag: 24");
    CHECK(table[9]["description"] == "Days Below 95%");
    CHECK(table[10]["description"] == "Days Above 105%");
    CHECK(table[9]["original"] == 0);

    write_json_file(dir / "missing.json",
                    {{"mode", "altered_difference"}, {"high", "wind.csv"}, {"low", "gone.csv"}, {"alpha", 0.5}, {"output", "ad2"}});
    const auto r = run_cli({"perturb", "-c", (dir / "missing.json").string()});
    CHECK(r.code == cli::kIo);
    CHECK(r.err.find("low") != std::string::npos);

    write_csv(dir / "short.csv", synthetic_wind(24));
    write_json_file(dir / "short.json",
                    {{"mode", "altered_difference"}, {"high", "wind.csv"}, {"low", "short.csv"}, {"alpha", 0.5}, {"output", "ad3"}});
    CHECK(run_cli({"perturb", "-c", (dir / "short.json").string()}).code == cli::kValidation);
}

TEST_CASE("analyze: identical ensemble gives zero exceedance") {
    TempDir dir("cli_analyze");
    write_fixtures(dir);
    write_json_file(dir / "g.json", {{"input", "solar.csv"},
                                     {"method", "sbb"},
                                     {"sbb", {{"pool_size", 1}}},
                                     {"replicates", 1},
                                     {"seed", 1},
                                     {"output", "ens"}});
    REQUIRE(run_cli({"generate", "-c", (dir / "g.json").string()}).code == 0);
    write_json_file(dir / "a.json", {{"original", "solar.csv"}, {"ensemble", "ens"}, {"output", "rep"}});
    REQUIRE(run_cli({"analyze", "-c", (dir / "a.json").string()}).code == 0);

    const auto ex = read_json(dir / "rep" / "exceedance.json");
    CHECK(ex["underage_count"]["max"] == 0.0);
    CHECK(ex["overage_count"]["max"] == 0.0);
    CHECK(ex["chunk_length"] == 24);
    const auto table = read_file(dir / "rep" / "summary_table.csv");
    CHECK(table.rfind("Description,mean,std,min,25%,50%,75%,max,Original\n", 0) == 0);
    CHECK(table.find("Coeff. of Var.") != std::string::npos);
    CHECK(table.find("Autocorr. Lag: 24") != std::string::npos);
    CHECK(std::filesystem::exists(dir / "rep" / "underage_histogram.csv"));

    REQUIRE(run_cli({"analyze", "-c", (dir / "a.json").string(), "-l", "48"}).code == 0);
    const auto ex48 = read_json(dir / "rep" / "exceedance.json");
    CHECK(ex48["chunk_length"] == 48);
    CHECK(ex48["chunks"] == 10);
}

TEST_CASE("analyze: length mismatch is a validation failure") {
    TempDir dir("cli_analyze_len");
    write_fixtures(dir);
    write_csv(dir / "other.csv", synthetic_solar(24 * 10));
    write_json_file(dir / "g.json",
                    {{"input", "other.csv"}, {"method", "sbb"}, {"replicates", 1}, {"seed", 1}, {"output", "ens"}});
    REQUIRE(run_cli({"generate", "-c", (dir / "g.json").string()}).code == 0);
    write_json_file(dir / "a.json", {{"original", "solar.csv"}, {"ensemble", "ens"}, {"output", "rep"}});
    CHECK(run_cli({"analyze", "-c", (dir / "a.json").string()}).code == cli::kValidation);
}

TEST_CASE("vre: fixed weights, sweep and ensemble shortfall") {
    TempDir dir("cli_vre");
    write_fixtures(dir);
    for (const char* name : {"solar", "wind"}) {
        write_json_file(dir / (std::string(name) + ".json"), {{"input", std::string(name) + ".csv"},
                                                              {"method", "sbb"},
                                                              {"replicates", 4},
                                                              {"seed", 11},
                                                              {"output", std::string(name) + "_ens"}});
        REQUIRE(run_cli({"generate", "-c", (dir / (std::string(name) + ".json")).string()}).code == 0);
    }
    const json config{{"solar", "solar.csv"},
                      {"wind", "wind.csv"},
                      {"nuclear", "nuclear.csv"},
                      {"load", "load.csv"},
                      {"weights", {{"solar", 45}, {"wind", 22}}},
                      {"seasons", {{{"name", "spring"}, {"start_hour", 24}, {"duration_hours", 120}}}},
                      {"sweep", {{"curtailment_cap", 0.5}, {"solar", {{"start", 0}, {"stop", 20}, {"step", 10}}},
                                 {"wind", {{"start", 0}, {"stop", 20}, {"step", 10}}}}},
                      {"ensemble", {{"solar", "solar_ens"}, {"wind", "wind_ens"}, {"pairs", 6}}},
                      {"seed", 99},
                      {"output", "case"}};
    write_json_file(dir / "v.json", config);
    const auto r = run_cli({"vre", "-c", (dir / "v.json").string()});
    REQUIRE_MESSAGE(r.code == 0, r.err);

    const auto adequacy = read_json(dir / "case" / "adequacy.json");
    CHECK(adequacy["weights"]["solar"] == 45.0);
    CHECK(adequacy["original"]["percent_supplied"].get<double>() > 0.0);
    CHECK(adequacy["seasons"][0]["name"] == "spring");
    CHECK(adequacy["sweep"]["grid_points"] == 9);
    const auto sweep = read_file(dir / "case" / "sweep.csv");
    CHECK(sweep.rfind("w_s,w_w,supplied,curtailed,shortfall_days,feasible\n", 0) == 0);
    const auto ens = read_json(dir / "case" / "ensemble_adequacy.json");
    CHECK(ens["pairs"] == 6);
    CHECK(ens["pairing_seed"] == 99);
    CHECK(std::filesystem::exists(dir / "case" / "shortfall_histogram.csv"));
    const auto manifest = read_json(dir / "case" / "manifest.json");
    CHECK(manifest["inputs"].size() == 6);
    CHECK(manifest["seed"] == 99);

    json noseed = config;
    noseed.erase("seed");
    write_json_file(dir / "v2.json", noseed);
    CHECK(run_cli({"vre", "-c", (dir / "v2.json").string()}).code == cli::kConfig);

    write_json_file(dir / "v3.json", {{"solar", "solar.csv"}, {"wind", "wind.csv"}, {"nuclear", "nuclear.csv"},
                                      {"load", "load.csv"}, {"output", "x"}});
    CHECK(run_cli({"vre", "-c", (dir / "v3.json").string()}).code == cli::kConfig);
}

}  // TEST_SUITE
