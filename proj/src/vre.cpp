#include "synthts/vre.hpp"

#include "synthts/error.hpp"
#include "synthts/parallel.hpp"
#include "synthts/random.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

namespace synthts {

namespace {

void require_same_length(const HourlySeries& a, const HourlySeries& b, const char* what) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::LengthMismatch, std::string(what) + ": lengths " + std::to_string(a.size()) + " and " +
                                                   std::to_string(b.size()) + " differ");
    }
}

}  // namespace

void VreWeights::validate() const {
    if (!(solar >= 0.0) || !(wind >= 0.0) || !std::isfinite(solar) || !std::isfinite(wind)) {
        throw Error(ErrorKind::InvalidArgument, "VRE weights must be finite and >= 0");
    }
}

HourlySeries combine_vre(const HourlySeries& solar, const HourlySeries& wind, const VreWeights& weights) {
    weights.validate();
    require_same_length(solar, wind, "combine_vre");
    std::vector<double> out(solar.size());
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = weights.solar * solar[t] + weights.wind * wind[t];
    const bool nonneg = std::all_of(out.begin(), out.end(), [](double v) { return v >= 0.0; });
    return HourlySeries(std::move(out), "vre", solar.start_timestamp(), nonneg && solar.non_negative() && wind.non_negative());
}

AdequacyResult adequacy(const HourlySeries& vre, const HourlySeries& nuclear, const HourlySeries& load,
                        double shortfall_fraction) {
    require_same_length(vre, load, "adequacy (vre vs load)");
    require_same_length(nuclear, load, "adequacy (nuclear vs load)");
    if (!(shortfall_fraction >= 0.0)) throw Error(ErrorKind::InvalidArgument, "shortfall fraction must be >= 0");

    const std::size_t n = load.size();
    double load_total = 0.0;
    double met = 0.0;
    double surplus = 0.0;
    double vre_total = 0.0;
    std::vector<double> gen(n);
    for (std::size_t t = 0; t < n; ++t) {
        gen[t] = nuclear[t] + vre[t];
        load_total += load[t];
        met += std::min(gen[t], load[t]);
        surplus += std::max(gen[t] - load[t], 0.0);
        vre_total += vre[t];
    }
    if (!(load_total > 0.0)) throw Error(ErrorKind::ZeroLoad, "total load must be positive");

    AdequacyResult r;
    r.percent_supplied = met / load_total;
    r.percent_curtailed = vre_total > 0.0 ? std::min(surplus / vre_total, 1.0) : 0.0;

    const std::size_t day = std::min<std::size_t>(24, n);
    const auto gen_days = chunk(gen, day).totals();
    const auto load_days = chunk(load, day).totals();
    for (std::size_t d = 0; d < gen_days.size(); ++d) {
        if (gen_days[d] < shortfall_fraction * load_days[d]) ++r.shortfall_days;
    }
    return r;
}

std::vector<double> WeightRange::points() const {
    if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start) return {};
    std::vector<double> out;
    const double tol = 1e-9 * step;
    for (std::size_t i = 0;; ++i) {
        const double w = start + static_cast<double>(i) * step;
        if (w > stop + tol) break;
        out.push_back(std::min(w, stop));
    }
    return out;
}

SweepResult weight_sweep(const HourlySeries& solar, const HourlySeries& wind, const HourlySeries& nuclear,
                         const HourlySeries& load, double curtailment_cap, const WeightRange& solar_range,
                         const WeightRange& wind_range, double shortfall_fraction, std::size_t threads) {
    const auto ws = solar_range.points();
    const auto ww = wind_range.points();
    if (ws.empty() || ww.empty()) throw Error(ErrorKind::EmptyGrid, "weight grid is empty");
    require_same_length(solar, wind, "weight_sweep");

    SweepResult out;
    out.curtailment_cap = curtailment_cap;
    out.all.resize(ws.size() * ww.size());
    parallel_for(out.all.size(), threads, [&](std::size_t idx) {
        const VreWeights w{ws[idx / ww.size()], ww[idx % ww.size()]};
        auto& e = out.all[idx];
        e.weights = w;
        e.result = adequacy(combine_vre(solar, wind, w), nuclear, load, shortfall_fraction);
        e.feasible = e.result.percent_curtailed <= curtailment_cap;
    });

    for (const auto& e : out.all) {
        if (e.feasible) out.ranked.push_back(e);
    }
    std::stable_sort(out.ranked.begin(), out.ranked.end(), [](const SweepEntry& a, const SweepEntry& b) {
        if (a.result.percent_supplied != b.result.percent_supplied) {
            return a.result.percent_supplied > b.result.percent_supplied;
        }
        return a.weights.solar + a.weights.wind < b.weights.solar + b.weights.wind;
    });
    return out;
}

EnsembleAdequacy ensemble_adequacy(std::span<const HourlySeries> solar_ensemble,
                                   std::span<const HourlySeries> wind_ensemble, const HourlySeries& nuclear,
                                   const HourlySeries& load, const VreWeights& weights, std::uint64_t pairing_seed,
                                   std::size_t pairs, double shortfall_fraction, std::size_t threads) {
    if (solar_ensemble.empty() || wind_ensemble.empty()) {
        throw Error(ErrorKind::InvalidArgument, "ensemble adequacy needs non-empty solar and wind ensembles");
    }
    if (pairs == 0) pairs = std::min(solar_ensemble.size(), wind_ensemble.size());

    EnsembleAdequacy out;
    RandomStream rng(pairing_seed);
    out.pairs.reserve(pairs);
    for (std::size_t b = 0; b < pairs; ++b) {
        const std::size_t s = rng.below(solar_ensemble.size());
        const std::size_t w = rng.below(wind_ensemble.size());
        out.pairs.emplace_back(s, w);
    }

    out.results.resize(pairs);
    parallel_for(pairs, threads, [&](std::size_t b) {
        const auto [s, w] = out.pairs[b];
        out.results[b] = adequacy(combine_vre(solar_ensemble[s], wind_ensemble[w], weights), nuclear, load,
                                  shortfall_fraction);
    });

    std::vector<double> sup, cur, days;
    for (const auto& r : out.results) {
        sup.push_back(r.percent_supplied);
        cur.push_back(r.percent_curtailed);
        days.push_back(static_cast<double>(r.shortfall_days));
    }
    out.supplied = empirical_distribution(std::move(sup));
    out.curtailed = empirical_distribution(std::move(cur));
    out.shortfall_days = empirical_distribution(std::move(days));
    return out;
}

std::vector<HourlySeries> seasonal_window(std::span<const HourlySeries> series, std::size_t start_hour,
                                          std::size_t duration_hours) {
    std::vector<HourlySeries> out;
    out.reserve(series.size());
    for (const auto& s : series) {
        if (duration_hours == 0 || start_hour >= s.size() || duration_hours > s.size() - start_hour) {
            throw Error(ErrorKind::OutOfRange, "window [" + std::to_string(start_hour) + ", " +
                                                   std::to_string(start_hour + duration_hours) +
                                                   ") is outside a series of length " + std::to_string(s.size()));
        }
        const auto v = s.values();
        const auto begin = v.begin() + static_cast<std::ptrdiff_t>(start_hour);
        out.push_back(s.with_values(std::vector<double>(begin, begin + static_cast<std::ptrdiff_t>(duration_hours))));
    }
    return out;
}

SeasonalAdequacy seasonal_adequacy(const HourlySeries& vre, const HourlySeries& nuclear, const HourlySeries& load,
                                   std::size_t start_hour, std::size_t duration_hours, double shortfall_fraction) {
    const std::vector<HourlySeries> all{vre, nuclear, load};
    auto w = seasonal_window(all, start_hour, duration_hours);
    auto result = adequacy(w[0], w[1], w[2], shortfall_fraction);
    return SeasonalAdequacy{start_hour, duration_hours, std::move(w[0]), std::move(w[1]), std::move(w[2]), result};
}

nlohmann::json to_json(const AdequacyResult& r) {
    return {{"percent_supplied", r.percent_supplied},
            {"percent_curtailed", r.percent_curtailed},
            {"shortfall_days", r.shortfall_days}};
}

nlohmann::json to_json(const EnsembleAdequacy& e) {
    nlohmann::json pairs = nlohmann::json::array();
    for (std::size_t b = 0; b < e.pairs.size(); ++b) {
        pairs.push_back({{"solar", e.pairs[b].first}, {"wind", e.pairs[b].second}, {"result", to_json(e.results[b])}});
    }
    return {{"pairs", e.pairs.size()},
            {"percent_supplied", to_json(e.supplied, false)},
            {"percent_curtailed", to_json(e.curtailed, false)},
            {"shortfall_days", to_json(e.shortfall_days, false)},
            {"per_pair", std::move(pairs)}};
}

void write_sweep_csv(const std::filesystem::path& path, std::span<const SweepEntry> entries) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << "w_s,w_w,supplied,curtailed,shortfall_days,feasible\n";
    for (const auto& e : entries) {
        out << format_value(e.weights.solar) << ',' << format_value(e.weights.wind) << ','
            << format_value(e.result.percent_supplied) << ',' << format_value(e.result.percent_curtailed) << ','
            << e.result.shortfall_days << ',' << (e.feasible ? 1 : 0) << '\n';
    }
}

}  // namespace synthts
