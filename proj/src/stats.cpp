#include "synthts/stats.hpp"

#include "synthts/error.hpp"
#include "synthts/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

namespace synthts {

double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw Error(ErrorKind::InvalidArgument, "quantile of an empty sample");
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

namespace {

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

}  // namespace

double sample_std(std::span<const double> values) {
    if (values.size() < 2) return 0.0;
    const double m = mean_of(values);
    double ss = 0.0;
    for (double x : values) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double autocorrelation(std::span<const double> values, std::size_t lag) {
    const std::size_t n = values.size();
    if (lag >= n) {
        throw Error(ErrorKind::SeriesTooShort,
                    "autocorrelation lag " + std::to_string(lag) + " needs more than " + std::to_string(n) + " values");
    }
    const double m = mean_of(values);
    double denom = 0.0;
    for (double x : values) denom += (x - m) * (x - m);
    if (denom == 0.0) return 0.0;
    double num = 0.0;
    for (std::size_t t = 0; t + lag < n; ++t) num += (values[t] - m) * (values[t + lag] - m);
    return num / denom;
}

SummaryStats summarize(const HourlySeries& series, std::size_t autocorr_lag) {
    const auto values = series.values();
    if (values.size() <= autocorr_lag) {
        throw Error(ErrorKind::SeriesTooShort, "series of length " + std::to_string(values.size()) +
                                                   " is too short for autocorrelation lag " +
                                                   std::to_string(autocorr_lag));
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    SummaryStats s;
    s.min = sorted.front();
    s.q1 = quantile_sorted(sorted, 0.25);
    s.median = quantile_sorted(sorted, 0.5);
    s.q3 = quantile_sorted(sorted, 0.75);
    s.max = sorted.back();
    s.mean = mean_of(values);
    s.std = sample_std(values);
    if (s.std == 0.0) {
        s.coeff_of_variation = 0.0;
    } else if (s.mean == 0.0) {
        s.coeff_of_variation = std::numeric_limits<double>::quiet_NaN();
    } else {
        s.coeff_of_variation = s.std / s.mean;
    }
    s.autocorr_lag = autocorr_lag;
    s.autocorr = autocorrelation(values, autocorr_lag);
    return s;
}

Threshold Threshold::absolute(double e) {
    if (!(e >= 0.0) || !std::isfinite(e)) {
        throw Error(ErrorKind::InvalidArgument, "absolute threshold e must be finite and >= 0");
    }
    return Threshold{Kind::Absolute, e};
}

Threshold Threshold::proportional(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw Error(ErrorKind::InvalidArgument, "proportional threshold alpha must be finite and >= 0");
    }
    return Threshold{Kind::Proportional, alpha};
}

namespace {

enum class Direction { Under, Over };

ExceedanceResult exceedance(const HourlySeries& original, const HourlySeries& synthetic, std::size_t l,
                            const Threshold& threshold, Aggregation aggregation, Direction direction) {
    if (original.size() != synthetic.size()) {
        throw Error(ErrorKind::LengthMismatch, "original has " + std::to_string(original.size()) +
                                                   " values but synthetic has " + std::to_string(synthetic.size()));
    }
    const auto orig_chunks = chunk(original, l);
    const auto synth_chunks = chunk(synthetic, l);

    ExceedanceResult result;
    auto consider = [&](double orig, double synth) {
        const double gap = direction == Direction::Under ? orig - synth : synth - orig;
        const double e = threshold.kind == Threshold::Kind::Absolute ? threshold.value : threshold.value * orig;
        if (gap > 0.0 && gap >= e) {
            result.sum += gap;
            ++result.count;
        }
    };

    if (aggregation == Aggregation::ChunkTotals) {
        const auto o = orig_chunks.totals();
        const auto s = synth_chunks.totals();
        for (std::size_t i = 0; i < o.size(); ++i) consider(o[i], s[i]);
    } else {
        for (std::size_t i = 0; i < orig_chunks.size(); ++i) {
            for (std::size_t j = 0; j < l; ++j) consider(orig_chunks.chunks[i][j], synth_chunks.chunks[i][j]);
        }
    }
    return result;
}

}  // namespace

ExceedanceResult underage(const HourlySeries& original, const HourlySeries& synthetic, std::size_t l,
                          const Threshold& threshold, Aggregation aggregation) {
    return exceedance(original, synthetic, l, threshold, aggregation, Direction::Under);
}

ExceedanceResult overage(const HourlySeries& original, const HourlySeries& synthetic, std::size_t l,
                         const Threshold& threshold, Aggregation aggregation) {
    return exceedance(original, synthetic, l, threshold, aggregation, Direction::Over);
}

std::size_t contiguous_count(const HourlySeries& original, const HourlySeries& synthetic, std::size_t l,
                             const Threshold& threshold) {
    return underage(original, synthetic, l, threshold).count;
}

EmpiricalDistribution empirical_distribution(std::vector<double> values) {
    if (values.empty()) throw Error(ErrorKind::InvalidArgument, "empirical distribution needs B >= 1 values");
    EmpiricalDistribution d;
    const double mass = 1.0 / static_cast<double>(values.size());
    d.masses.assign(values.size(), mass);
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    d.mean = mean_of(values);
    d.std = sample_std(values);
    d.min = sorted.front();
    d.q1 = quantile_sorted(sorted, 0.25);
    d.median = quantile_sorted(sorted, 0.5);
    d.q3 = quantile_sorted(sorted, 0.75);
    d.max = sorted.back();
    d.values = std::move(values);
    return d;
}

EmpiricalDistribution empirical_distribution(std::span<const HourlySeries> ensemble, const HourlySeries& original,
                                             ExceedanceStatistic statistic, const ExceedanceParams& params,
                                             std::size_t threads) {
    std::vector<double> values(ensemble.size());
    parallel_for(ensemble.size(), threads, [&](std::size_t b) {
        const bool under = statistic == ExceedanceStatistic::UnderageSum || statistic == ExceedanceStatistic::UnderageCount;
        const auto r = under ? underage(original, ensemble[b], params.chunk_length, params.threshold, params.aggregation)
                             : overage(original, ensemble[b], params.chunk_length, params.threshold, params.aggregation);
        const bool sum = statistic == ExceedanceStatistic::UnderageSum || statistic == ExceedanceStatistic::OverageSum;
        values[b] = sum ? r.sum : static_cast<double>(r.count);
    });
    return empirical_distribution(std::move(values));
}

ExceedanceReport exceedance_report(std::span<const HourlySeries> ensemble, const HourlySeries& original,
                                   std::size_t chunk_length, const Threshold& under_threshold,
                                   const Threshold& over_threshold, std::size_t threads) {
    ExceedanceReport r;
    r.chunk_length = chunk_length;
    r.chunks = chunk(original, chunk_length).size();
    r.under_threshold = under_threshold;
    r.over_threshold = over_threshold;
    r.underage.resize(ensemble.size());
    r.overage.resize(ensemble.size());
    parallel_for(ensemble.size(), threads, [&](std::size_t b) {
        r.underage[b] = underage(original, ensemble[b], chunk_length, under_threshold);
        r.overage[b] = overage(original, ensemble[b], chunk_length, over_threshold);
    });

    std::vector<double> us, uc, os, oc;
    for (std::size_t b = 0; b < ensemble.size(); ++b) {
        us.push_back(r.underage[b].sum);
        uc.push_back(static_cast<double>(r.underage[b].count));
        os.push_back(r.overage[b].sum);
        oc.push_back(static_cast<double>(r.overage[b].count));
    }
    r.underage_sum = empirical_distribution(std::move(us));
    r.underage_count = empirical_distribution(std::move(uc));
    r.overage_sum = empirical_distribution(std::move(os));
    r.overage_count = empirical_distribution(std::move(oc));
    return r;
}

SummaryTable ensemble_summary_table(std::span<const HourlySeries> ensemble, const HourlySeries& original,
                                    std::size_t autocorr_lag, std::size_t threads) {
    if (ensemble.empty()) throw Error(ErrorKind::InvalidArgument, "summary table needs at least one series");
    std::vector<SummaryStats> stats(ensemble.size());
    parallel_for(ensemble.size(), threads, [&](std::size_t b) { stats[b] = summarize(ensemble[b], autocorr_lag); });
    const SummaryStats orig = summarize(original, autocorr_lag);

    using Field = double SummaryStats::*;
    const std::array<std::pair<std::string, Field>, kSummaryRowCount> fields{{
        {"Min", &SummaryStats::min},
        {"First Quartile", &SummaryStats::q1},
        {"Median", &SummaryStats::median},
        {"Third Quartile", &SummaryStats::q3},
        {"Max", &SummaryStats::max},
        {"Mean", &SummaryStats::mean},
        {"Standard Dev.", &SummaryStats::std},
        {"Coeff. of Var.", &SummaryStats::coeff_of_variation},
        {"Autocorr. Lag: " + std::to_string(autocorr_lag), &SummaryStats::autocorr},
    }};

    SummaryTable table;
    table.autocorr_lag = autocorr_lag;
    for (const auto& [name, field] : fields) {
        std::vector<double> col;
        col.reserve(stats.size());
        for (const auto& s : stats) col.push_back(s.*field);
        const auto d = empirical_distribution(std::move(col));
        table.rows.push_back({name, d.mean, d.std, d.min, d.q1, d.median, d.q3, d.max, orig.*field});
    }
    return table;
}

std::vector<HistogramBin> histogram(std::span<const double> values, std::size_t bins) {
    if (values.empty()) return {};
    if (bins == 0) throw Error(ErrorKind::InvalidArgument, "histogram needs at least one bin");
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double total = static_cast<double>(values.size());
    if (lo == hi) return {HistogramBin{lo, hi, values.size(), 1.0}};

    const double width = (hi - lo) / static_cast<double>(bins);
    std::vector<HistogramBin> out(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        out[b].lower = lo + width * static_cast<double>(b);
        out[b].upper = b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
    }
    for (double v : values) {
        auto b = static_cast<std::size_t>((v - lo) / width);
        if (b >= bins) b = bins - 1;
        ++out[b].frequency;
    }
    for (auto& bin : out) bin.mass = static_cast<double>(bin.frequency) / total;
    return out;
}

std::vector<HistogramBin> integer_histogram(std::span<const double> values) {
    if (values.empty()) return {};
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const auto lo = static_cast<long long>(std::floor(*lo_it));
    const auto hi = static_cast<long long>(std::floor(*hi_it));
    std::vector<HistogramBin> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t b = 0; b < out.size(); ++b) {
        out[b].lower = static_cast<double>(lo + static_cast<long long>(b));
        out[b].upper = out[b].lower + 1.0;
    }
    for (double v : values) ++out[static_cast<std::size_t>(static_cast<long long>(std::floor(v)) - lo)].frequency;
    const double total = static_cast<double>(values.size());
    for (auto& bin : out) bin.mass = static_cast<double>(bin.frequency) / total;
    return out;
}

nlohmann::json to_json(const SummaryStats& s) {
    return {{"min", s.min},
            {"q1", s.q1},
            {"median", s.median},
            {"q3", s.q3},
            {"max", s.max},
            {"mean", s.mean},
            {"std", s.std},
            {"coeff_of_variation", s.coeff_of_variation},
            {"autocorr_lag", s.autocorr_lag},
            {"autocorr", s.autocorr}};
}

nlohmann::json to_json(const EmpiricalDistribution& d, bool include_values) {
    nlohmann::json j{{"replicates", d.values.size()},
                     {"mass", d.masses.empty() ? 0.0 : d.masses.front()},
                     {"mean", d.mean},
                     {"std", d.std},
                     {"min", d.min},
                     {"q1", d.q1},
                     {"median", d.median},
                     {"q3", d.q3},
                     {"max", d.max}};
    if (include_values) j["values"] = d.values;
    return j;
}

nlohmann::json to_json(const Threshold& t) {
    return {{"kind", t.kind == Threshold::Kind::Absolute ? "absolute" : "proportional"}, {"value", t.value}};
}

Threshold threshold_from_json(const nlohmann::json& j) {
    const auto kind = j.at("kind").get<std::string>();
    const double value = j.at("value").get<double>();
    if (kind == "absolute") return Threshold::absolute(value);
    if (kind == "proportional") return Threshold::proportional(value);
    throw Error(ErrorKind::Config, "threshold kind must be 'absolute' or 'proportional', got '" + kind + "'");
}

nlohmann::json to_json(const ExceedanceReport& r) {
    nlohmann::json per_series = nlohmann::json::array();
    for (std::size_t b = 0; b < r.underage.size(); ++b) {
        per_series.push_back({{"index", b},
                              {"underage_sum", r.underage[b].sum},
                              {"underage_count", r.underage[b].count},
                              {"overage_sum", r.overage[b].sum},
                              {"overage_count", r.overage[b].count}});
    }
    return {{"chunk_length", r.chunk_length},
            {"chunks", r.chunks},
            {"under_threshold", to_json(r.under_threshold)},
            {"over_threshold", to_json(r.over_threshold)},
            {"underage_sum", to_json(r.underage_sum, false)},
            {"underage_count", to_json(r.underage_count, false)},
            {"overage_sum", to_json(r.overage_sum, false)},
            {"overage_count", to_json(r.overage_count, false)},
            {"series", std::move(per_series)}};
}

void write_summary_table_csv(const std::filesystem::path& path, const SummaryTable& table) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << "Description,mean,std,min,25%,50%,75%,max,Original\n";
    for (const auto& r : table.rows) {
        out << r.description << ',' << format_value(r.mean) << ',' << format_value(r.std) << ','
            << format_value(r.min) << ',' << format_value(r.q1) << ',' << format_value(r.median) << ','
            << format_value(r.q3) << ',' << format_value(r.max) << ',' << format_value(r.original) << '\n';
    }
}

void write_histogram_csv(const std::filesystem::path& path, std::span<const HistogramBin> bins) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << "lower,upper,frequency,mass\n";
    for (const auto& b : bins) {
        out << format_value(b.lower) << ',' << format_value(b.upper) << ',' << b.frequency << ','
            << format_value(b.mass) << '\n';
    }
}

}  // namespace synthts
