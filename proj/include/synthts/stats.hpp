#pragma once

#include "synthts/series.hpp"

#include "json.hpp"

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace synthts {

struct SummaryStats {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double std = 0.0;                 // sample standard deviation (n - 1)
    double coeff_of_variation = 0.0;  // std / mean; NaN when mean == 0 but std > 0
    std::size_t autocorr_lag = 24;
    double autocorr = 0.0;            // 0 for a constant series
};

// Linear interpolation between order statistics: position p * (n - 1) of `sorted`.
double quantile_sorted(std::span<const double> sorted, double p);

double sample_std(std::span<const double> values);

// Non-circular lag-h sample autocorrelation of the mean-centred series:
// sum_{t<n-h} (x_t - m)(x_{t+h} - m) / sum_t (x_t - m)^2.
double autocorrelation(std::span<const double> values, std::size_t lag);

// Throws SeriesTooShort unless length > autocorr_lag.
SummaryStats summarize(const HourlySeries& series, std::size_t autocorr_lag = 24);

struct Threshold {
    enum class Kind { Absolute, Proportional };
    Kind kind = Kind::Proportional;
    double value = 0.05;

    static Threshold absolute(double e);
    static Threshold proportional(double alpha);
};

// How deficits are aggregated before comparing with the threshold.
enum class Aggregation {
    ChunkTotals,  // per chunk: (sum original - sum synthetic) vs e or alpha * sum original
    Hourly,       // per hour:  (original - synthetic) vs e or alpha * original
};

struct ExceedanceResult {
    double sum = 0.0;       // energy units (MWh per chunk summed)
    std::size_t count = 0;  // chunks (or hours under Aggregation::Hourly)
};

/**
 * Chunk-level underproduction of `synthetic` relative to `original`.
 *
 * Both series are chunked with length l (wrapped). A chunk counts when its
 * deficit is positive and at least the threshold e_i, where e_i is the absolute
 * e or alpha times the original chunk total. Returns the summed deficits of the
 * counted chunks and their number.
 */
ExceedanceResult underage(const HourlySeries& original, const HourlySeries& synthetic, std::size_t l,
                          const Threshold& threshold, Aggregation aggregation = Aggregation::ChunkTotals);

/// Mirror image of underage(): surplus = synthetic total - original total.
ExceedanceResult overage(const HourlySeries& original, const HourlySeries& synthetic, std::size_t l,
                         const Threshold& threshold, Aggregation aggregation = Aggregation::ChunkTotals);

// Number of l-hour sequential chunks in deficit; underage(...).count.
std::size_t contiguous_count(const HourlySeries& original, const HourlySeries& synthetic, std::size_t l,
                             const Threshold& threshold);

/// Empirical bootstrap distribution: mass 1/B on each of B values.
struct EmpiricalDistribution {
    std::vector<double> values;
    std::vector<double> masses;
    double mean = 0.0;
    double std = 0.0;  // sample std; 0 for B == 1
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

EmpiricalDistribution empirical_distribution(std::vector<double> values);

enum class ExceedanceStatistic { UnderageSum, UnderageCount, OverageSum, OverageCount };

struct ExceedanceParams {
    std::size_t chunk_length = 24;
    Threshold threshold;
    Aggregation aggregation = Aggregation::ChunkTotals;
};

EmpiricalDistribution empirical_distribution(std::span<const HourlySeries> ensemble, const HourlySeries& original,
                                             ExceedanceStatistic statistic, const ExceedanceParams& params,
                                             std::size_t threads = 1);

struct ExceedanceReport {
    std::size_t chunk_length = 24;
    std::size_t chunks = 0;
    Threshold under_threshold;
    Threshold over_threshold;
    std::vector<ExceedanceResult> underage;  // one per series
    std::vector<ExceedanceResult> overage;
    EmpiricalDistribution underage_sum;
    EmpiricalDistribution underage_count;
    EmpiricalDistribution overage_sum;
    EmpiricalDistribution overage_count;
};

ExceedanceReport exceedance_report(std::span<const HourlySeries> ensemble, const HourlySeries& original,
                                   std::size_t chunk_length, const Threshold& under_threshold,
                                   const Threshold& over_threshold, std::size_t threads = 1);

/// One row of the distribution-of-statistics table.
struct SummaryTableRow {
    std::string description;
    double mean = 0.0;
    double std = 0.0;
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    double original = 0.0;
};

struct SummaryTable {
    std::size_t autocorr_lag = 24;
    std::vector<SummaryTableRow> rows;  // Min, First Quartile, ..., Autocorr. Lag: h
};

inline constexpr std::size_t kSummaryRowCount = 9;

SummaryTable ensemble_summary_table(std::span<const HourlySeries> ensemble, const HourlySeries& original,
                                    std::size_t autocorr_lag = 24, std::size_t threads = 1);

struct HistogramBin {
    double lower = 0.0;
    double upper = 0.0;  // exclusive, except for the last bin
    std::size_t frequency = 0;
    double mass = 0.0;
};

// `bins` equal-width bins over [min, max]. A constant sample yields one bin.
std::vector<HistogramBin> histogram(std::span<const double> values, std::size_t bins);
// One bin per integer value from min to max (for counts).
std::vector<HistogramBin> integer_histogram(std::span<const double> values);

nlohmann::json to_json(const SummaryStats& s);
nlohmann::json to_json(const EmpiricalDistribution& d, bool include_values = true);
nlohmann::json to_json(const ExceedanceReport& r);
nlohmann::json to_json(const Threshold& t);
Threshold threshold_from_json(const nlohmann::json& j);

void write_summary_table_csv(const std::filesystem::path& path, const SummaryTable& table);
void write_histogram_csv(const std::filesystem::path& path, std::span<const HistogramBin> bins);

}  // namespace synthts
