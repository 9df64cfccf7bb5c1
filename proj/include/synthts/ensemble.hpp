#pragma once

#include "synthts/series.hpp"

#include "json.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace synthts {

/// B synthetic series with the provenance needed to regenerate them.
struct Ensemble {
    std::string method;             // "nnlb", "sbb", ...
    nlohmann::json config;          // generator parameters, recorded verbatim
    std::uint64_t master_seed = 0;
    std::vector<std::uint64_t> seeds;  // child seed of each series
    std::vector<HourlySeries> series;

    std::string source_label;
    std::size_t source_length = 0;
    std::string source_checksum;

    std::size_t size() const noexcept { return series.size(); }
};

inline constexpr const char* kEnsembleFormat = "synthts-ensemble/1";

// Directory layout: manifest.json plus series_0000.csv, series_0001.csv, ...
// Rewriting the same ensemble produces byte-identical files. Stale series files
// from a larger earlier run are removed.
void write_ensemble(const std::filesystem::path& dir, const Ensemble& ensemble);
Ensemble read_ensemble(const std::filesystem::path& dir);

std::string series_file_name(std::size_t index);

}  // namespace synthts
