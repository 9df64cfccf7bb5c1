#include "synthts/ensemble.hpp"

#include "synthts/error.hpp"

#include <cstdio>
#include <fstream>
#include <regex>

namespace synthts {

std::string series_file_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "series_%04zu.csv", index);
    return buf;
}

void write_ensemble(const std::filesystem::path& dir, const Ensemble& ensemble) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    static const std::regex series_pattern(R"(series_\d+\.csv)");
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (std::regex_match(name, series_pattern)) fs::remove(entry.path());
    }

    nlohmann::json manifest;
    manifest["format"] = kEnsembleFormat;
    manifest["method"] = ensemble.method;
    manifest["config"] = ensemble.config;
    manifest["master_seed"] = ensemble.master_seed;
    manifest["replicates"] = ensemble.series.size();
    manifest["source"] = {{"label", ensemble.source_label},
                          {"length", ensemble.source_length},
                          {"sha256", ensemble.source_checksum}};
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t b = 0; b < ensemble.series.size(); ++b) {
        const auto name = series_file_name(b);
        write_csv(dir / name, ensemble.series[b]);
        entries.push_back({{"file", name}, {"seed", b < ensemble.seeds.size() ? ensemble.seeds[b] : 0}});
    }
    manifest["series"] = std::move(entries);

    std::ofstream out(dir / "manifest.json", std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + (dir / "manifest.json").string());
    out << manifest.dump(2) << '\n';
}

Ensemble read_ensemble(const std::filesystem::path& dir) {
    const auto manifest_path = dir / "manifest.json";
    std::ifstream in(manifest_path);
    if (!in) throw Error(ErrorKind::Io, "cannot open ensemble manifest " + manifest_path.string());
    nlohmann::json manifest;
    try {
        in >> manifest;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Config, "malformed manifest " + manifest_path.string() + ": " + e.what());
    }
    if (manifest.value("format", "") != kEnsembleFormat) {
        throw Error(ErrorKind::Config, manifest_path.string() + " is not a " + std::string(kEnsembleFormat) + " manifest");
    }

    Ensemble ens;
    try {
        ens.method = manifest.at("method").get<std::string>();
        ens.config = manifest.at("config");
        ens.master_seed = manifest.at("master_seed").get<std::uint64_t>();
        const auto& src = manifest.at("source");
        ens.source_label = src.at("label").get<std::string>();
        ens.source_length = src.at("length").get<std::size_t>();
        ens.source_checksum = src.at("sha256").get<std::string>();
        for (const auto& e : manifest.at("series")) {
            ens.seeds.push_back(e.at("seed").get<std::uint64_t>());
            CsvOptions opts;
            opts.label = ens.source_label;
            ens.series.push_back(load_csv(dir / e.at("file").get<std::string>(), opts));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Config, "malformed manifest " + manifest_path.string() + ": " + e.what());
    }
    if (ens.series.empty()) throw Error(ErrorKind::Config, manifest_path.string() + " lists no series");
    return ens;
}

}  // namespace synthts
