#include "synthts/perturb.hpp"

#include "synthts/error.hpp"
#include "synthts/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace synthts {

OffsetDistribution OffsetDistribution::normal(double mean, double std, std::optional<double> below_probability) {
    if (!std::isfinite(mean) || !(std > 0.0) || !std::isfinite(std)) {
        throw Error(ErrorKind::InvalidDistributionParams, "normal offsets need a finite mean and std sigma > 0");
    }
    if (below_probability && !(*below_probability > 0.0 && *below_probability < 1.0)) {
        throw Error(ErrorKind::InvalidProbability, "below probability must lie strictly between 0 and 1");
    }
    return OffsetDistribution{Kind::Normal, mean, std, below_probability};
}

OffsetDistribution OffsetDistribution::exponential(double mean) {
    if (!(mean > 0.0) || !std::isfinite(mean)) {
        throw Error(ErrorKind::InvalidDistributionParams, "exponential offsets need mean beta > 0");
    }
    return OffsetDistribution{Kind::Exponential, mean, mean, std::nullopt};
}

double OffsetDistribution::effective_mean() const {
    if (kind == Kind::Exponential) return mean;
    return below_probability ? mean + normal_below_probability(std, *below_probability) : mean;
}

void ClampPolicy::validate() const {
    if (!(alpha_max > alpha_min)) {
        throw Error(ErrorKind::InvalidDistributionParams, "clamp needs alpha_max > alpha_min");
    }
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorKind::InvalidProbability, "normal quantile needs 0 < p < 1, got " + std::to_string(p));
    }
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                   1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                   6.680131188771972e+01,  -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                   -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                   3.754408661907416e+00};
    // Upper half by symmetry: 1 - p is exact there, so tail accuracy matches the lower tail.
    if (p > 0.5) return -inverse_normal_cdf(1.0 - p);
    constexpr double p_low = 0.02425;

    double x = 0.0;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // Halley refinement
    const double e = normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

double normal_below_probability(double sigma, double pi) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw Error(ErrorKind::InvalidDistributionParams, "sigma must be > 0");
    }
    if (!(pi > 0.0 && pi < 1.0)) {
        throw Error(ErrorKind::InvalidProbability, "probability must lie strictly between 0 and 1");
    }
    return sigma * inverse_normal_cdf(pi);
}

namespace {

bool all_non_negative(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x >= 0.0; });
}

}  // namespace

AlteredSeries incremental_select(const HourlySeries& source, const OffsetDistribution& dist, const ClampPolicy& clamp,
                                 std::uint64_t seed) {
    clamp.validate();
    // Re-run the factory checks for hand-built structs.
    const OffsetDistribution checked = dist.kind == OffsetDistribution::Kind::Normal
                                           ? OffsetDistribution::normal(dist.mean, dist.std, dist.below_probability)
                                           : OffsetDistribution::exponential(dist.mean);
    const double centre = checked.effective_mean();

    RandomStream rng(seed);
    const auto x = source.values();
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double u = rng.uniform_open();
        const double z = checked.kind == OffsetDistribution::Kind::Normal ? centre + checked.std * inverse_normal_cdf(u)
                                                                          : -checked.mean * std::log(u);
        const double a = clamp.alpha_min * x[i];
        const double b = clamp.alpha_max * x[i];
        const double eps = std::clamp(z, std::min(a, b), std::max(a, b));
        out[i] = x[i] - eps;
    }

    const bool nonneg = source.non_negative() && all_non_negative(out);
    AlteredSeries result{HourlySeries(std::move(out), source.label(), source.start_timestamp(), nonneg), {}};
    result.provenance = {{"method", "incremental_selection"},
                         {"distribution", to_json(checked)},
                         {"effective_mean", centre},
                         {"clamp", {{"alpha_max", clamp.alpha_max}, {"alpha_min", clamp.alpha_min}}},
                         {"seed", seed},
                         {"source_sha256", checksum(source)}};
    return result;
}

AlteredSeries altered_difference(const HourlySeries& high, const HourlySeries& low, double alpha, bool delta_nonneg,
                                 bool result_nonneg) {
    if (high.size() != low.size()) {
        throw Error(ErrorKind::LengthMismatch, "altered difference needs equal lengths, got " +
                                                   std::to_string(high.size()) + " and " + std::to_string(low.size()));
    }
    if (!std::isfinite(alpha)) throw Error(ErrorKind::InvalidArgument, "alpha must be finite");

    std::vector<double> r(low.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        double delta = high[i] - low[i];
        if (delta_nonneg) delta = std::max(delta, 0.0);
        r[i] = low[i] - alpha * delta;
        if (result_nonneg) r[i] = std::max(r[i], 0.0);
    }

    const bool nonneg = low.non_negative() && all_non_negative(r);
    AlteredSeries result{HourlySeries(std::move(r), low.label(), low.start_timestamp(), nonneg), {}};
    result.provenance = {{"method", "altered_difference"},
                         {"alpha", alpha},
                         {"delta_nonneg", delta_nonneg},
                         {"result_nonneg", result_nonneg},
                         {"high_sha256", checksum(high)},
                         {"low_sha256", checksum(low)}};
    return result;
}

AuditReport direction_audit(const HourlySeries& altered, const HourlySeries& source, const AuditParams& params) {
    if (altered.size() != source.size()) {
        throw Error(ErrorKind::LengthMismatch, "audit needs equal lengths, got " + std::to_string(altered.size()) +
                                                   " and " + std::to_string(source.size()));
    }
    AuditReport r;
    r.altered = summarize(altered, params.autocorr_lag);
    r.source = summarize(source, params.autocorr_lag);
    r.below = underage(source, altered, params.chunk_length, Threshold::proportional(params.below_fraction));
    r.above = overage(source, altered, params.chunk_length, Threshold::proportional(params.above_fraction));
    return r;
}

nlohmann::json to_json(const OffsetDistribution& d) {
    if (d.kind == OffsetDistribution::Kind::Exponential) return {{"kind", "exponential"}, {"mean", d.mean}};
    nlohmann::json j{{"kind", "normal"}, {"mean", d.mean}, {"std", d.std}};
    if (d.below_probability) j["below_probability"] = *d.below_probability;
    return j;
}

OffsetDistribution offset_distribution_from_json(const nlohmann::json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "normal") {
        std::optional<double> pi;
        if (j.contains("below_probability") && !j["below_probability"].is_null()) {
            pi = j["below_probability"].get<double>();
        }
        return OffsetDistribution::normal(j.value("mean", 0.0), j.at("std").get<double>(), pi);
    }
    if (kind == "exponential") return OffsetDistribution::exponential(j.at("mean").get<double>());
    throw Error(ErrorKind::Config, "distribution kind must be 'normal' or 'exponential', got '" + kind + "'");
}

nlohmann::json to_json(const AuditReport& r) {
    return {{"altered", to_json(r.altered)},
            {"source", to_json(r.source)},
            {"days_below", r.below.count},
            {"days_below_energy", r.below.sum},
            {"days_above", r.above.count},
            {"days_above_energy", r.above.sum}};
}

}  // namespace synthts
