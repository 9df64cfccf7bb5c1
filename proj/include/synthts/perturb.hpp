#pragma once

#include "synthts/series.hpp"
#include "synthts/stats.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>

namespace synthts {

struct OffsetDistribution {
    enum class Kind { Normal, Exponential };
    Kind kind = Kind::Normal;
    double mean = 0.0;  // mu (normal) or beta (exponential)
    double std = 1.0;   // sigma; unused for exponential
    std::optional<double> below_probability;  // normal only: P(offset > 0) becomes this value when mean = 0

    // Throws InvalidDistributionParams for sigma <= 0, InvalidProbability for pi outside (0, 1).
    static OffsetDistribution normal(double mean, double std, std::optional<double> below_probability = std::nullopt);
    // Throws InvalidDistributionParams for beta <= 0.
    static OffsetDistribution exponential(double mean);

    // mu + sigma * z_pi when a below-probability is set, else mu. Exponential: beta.
    double effective_mean() const;
};

/// Offsets are clamped to [alpha_min * x, alpha_max * x] for each observation x.
struct ClampPolicy {
    double alpha_max = 1.0;
    double alpha_min = -1.0;

    // Throws InvalidDistributionParams unless alpha_max > alpha_min.
    void validate() const;
};

struct AlteredSeries {
    HourlySeries values;
    nlohmann::json provenance;
};

// Standard-normal quantile. Acklam's rational approximation (relative error
// below 1.15e-9) followed by one Halley step against std::erfc.
// Throws InvalidProbability unless 0 < p < 1.
double inverse_normal_cdf(double p);

double normal_cdf(double x);

// sigma * z_pi: how far to shift a normal so that P(offset > 0) = pi for mean 0.
double normal_below_probability(double sigma, double pi);

/**
 * Incremental selection: x'_i = x_i - eps_i.
 *
 * Each hour draws z from `dist`; eps_i = z clamped to [alpha_min * x_i, alpha_max * x_i]
 * (bounds ordered when x_i < 0). A zero observation therefore always gets eps_i = 0.
 * One RandomStream(seed) is consumed in hour order.
 */
AlteredSeries incremental_select(const HourlySeries& source, const OffsetDistribution& dist, const ClampPolicy& clamp,
                                 std::uint64_t seed);

// R = low - alpha * (high - low). With delta_nonneg the differences are floored at 0
// first; with result_nonneg negative entries of R become 0. Caller decides which
// series is the "higher" one. Throws LengthMismatch.
AlteredSeries altered_difference(const HourlySeries& high, const HourlySeries& low, double alpha,
                                 bool delta_nonneg = false, bool result_nonneg = false);

struct AuditParams {
    std::size_t chunk_length = 24;
    double below_fraction = 0.05;  // days below (1 - f) of the source
    double above_fraction = 0.05;  // days above (1 + f) of the source
    std::size_t autocorr_lag = 24;
};

struct AuditReport {
    SummaryStats altered;
    SummaryStats source;
    ExceedanceResult below;
    ExceedanceResult above;
};

AuditReport direction_audit(const HourlySeries& altered, const HourlySeries& source, const AuditParams& params = {});

nlohmann::json to_json(const OffsetDistribution& d);
OffsetDistribution offset_distribution_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AuditReport& r);

}  // namespace synthts
