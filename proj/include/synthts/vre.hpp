#pragma once

#include "synthts/ensemble.hpp"
#include "synthts/series.hpp"
#include "synthts/stats.hpp"

#include "json.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace synthts {

/// Multipliers applied to the observed solar and wind series.
struct VreWeights {
    double solar = 0.0;
    double wind = 0.0;

    void validate() const;
};

struct AdequacyResult {
    double percent_supplied = 0.0;   // fraction of load energy met, in [0, 1]
    double percent_curtailed = 0.0;  // fraction of VRE energy curtailed, in [0, 1]
    std::size_t shortfall_days = 0;  // 24-hour chunks with generation < fraction * load
};

inline constexpr double kDefaultShortfallFraction = 0.9;

// Elementwise w_s * solar + w_w * wind.
HourlySeries combine_vre(const HourlySeries& solar, const HourlySeries& wind, const VreWeights& weights);

/**
 * Energy accounting with nuclear as must-run baseline.
 *
 *   gen_t       = nuclear_t + vre_t
 *   supplied    = sum min(gen_t, load_t) / sum load_t
 *   curtailed   = sum max(gen_t - load_t, 0) / sum vre_t   (0 when there is no VRE)
 *   shortfall   = #days with sum gen < fraction * sum load
 *
 * All surplus is attributed to VRE. Throws LengthMismatch or ZeroLoad.
 */
AdequacyResult adequacy(const HourlySeries& vre, const HourlySeries& nuclear, const HourlySeries& load,
                        double shortfall_fraction = kDefaultShortfallFraction);

/// Inclusive range start, start + step, ..., <= stop.
struct WeightRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    std::vector<double> points() const;
};

struct SweepEntry {
    VreWeights weights;
    AdequacyResult result;
    bool feasible = false;
};

struct SweepResult {
    double curtailment_cap = 0.0;
    std::vector<SweepEntry> all;     // grid order: solar outer, wind inner
    std::vector<SweepEntry> ranked;  // feasible only; descending supplied, ties by smaller w_s + w_w
};

SweepResult weight_sweep(const HourlySeries& solar, const HourlySeries& wind, const HourlySeries& nuclear,
                         const HourlySeries& load, double curtailment_cap, const WeightRange& solar_range,
                         const WeightRange& wind_range, double shortfall_fraction = kDefaultShortfallFraction,
                         std::size_t threads = 1);

struct EnsembleAdequacy {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (solar index, wind index)
    std::vector<AdequacyResult> results;
    EmpiricalDistribution supplied;
    EmpiricalDistribution curtailed;
    EmpiricalDistribution shortfall_days;
};

// Draws `pairs` (solar, wind) members independently and uniformly with replacement
// from RandomStream(pairing_seed); pairs == 0 means min(|solar|, |wind|).
EnsembleAdequacy ensemble_adequacy(std::span<const HourlySeries> solar_ensemble,
                                   std::span<const HourlySeries> wind_ensemble, const HourlySeries& nuclear,
                                   const HourlySeries& load, const VreWeights& weights, std::uint64_t pairing_seed,
                                   std::size_t pairs = 0, double shortfall_fraction = kDefaultShortfallFraction,
                                   std::size_t threads = 1);

// [start_hour, start_hour + duration) of every series. Throws OutOfRange.
std::vector<HourlySeries> seasonal_window(std::span<const HourlySeries> series, std::size_t start_hour,
                                          std::size_t duration_hours);

struct SeasonalAdequacy {
    std::size_t start_hour = 0;
    std::size_t duration_hours = 0;
    HourlySeries vre;
    HourlySeries nuclear;
    HourlySeries load;
    AdequacyResult result;
};

SeasonalAdequacy seasonal_adequacy(const HourlySeries& vre, const HourlySeries& nuclear, const HourlySeries& load,
                                   std::size_t start_hour, std::size_t duration_hours,
                                   double shortfall_fraction = kDefaultShortfallFraction);

nlohmann::json to_json(const AdequacyResult& r);
nlohmann::json to_json(const EnsembleAdequacy& e);
void write_sweep_csv(const std::filesystem::path& path, std::span<const SweepEntry> entries);

}  // namespace synthts
