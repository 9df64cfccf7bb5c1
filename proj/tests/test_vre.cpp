#include "doctest.h"

#include "support/fixtures.hpp"

#include "synthts/error.hpp"
#include "synthts/sbb.hpp"
#include "synthts/vre.hpp"

#include <cmath>

using namespace synthts;
using namespace synthts::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected synthts::Error");
    return ErrorKind::Config;
}

HourlySeries constant(std::size_t n, double v) { return HourlySeries(std::vector<double>(n, v)); }

}  // namespace

TEST_SUITE("vre") {

TEST_CASE("combining weights") {
    const HourlySeries solar(std::vector<double>{2, 0});
    const HourlySeries wind(std::vector<double>{1, 3});
    const auto v = combine_vre(solar, wind, {45, 22});
    CHECK(v[0] == 112.0);
    CHECK(v[1] == 66.0);
    CHECK(kind_of([&] { combine_vre(solar, wind, {-1, 0}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { combine_vre(solar, HourlySeries({1.0}), {1, 1}); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("adequacy hand example") {
    // two hours: gen = [60 + 30, 60 + 0] vs load [80, 100]
    const HourlySeries vre(std::vector<double>{30, 0});
    const HourlySeries nuclear(std::vector<double>{60, 60});
    const HourlySeries load(std::vector<double>{80, 100});
    const auto r = adequacy(vre, nuclear, load);
    CHECK(r.percent_supplied == doctest::Approx(140.0 / 180.0));
    CHECK(r.percent_curtailed == doctest::Approx(10.0 / 30.0));
    CHECK(r.shortfall_days == 1);  // 150 < 0.9 * 180
    CHECK(adequacy(vre, nuclear, load, 0.8).shortfall_days == 0);
}

TEST_CASE("shortfall uses strict comparison per 24 hours") {
    const auto load = constant(48, 10.0);
    const auto nuclear = constant(48, 9.0);
    const auto none = constant(48, 0.0);
    CHECK(adequacy(none, nuclear, load, 0.9).shortfall_days == 0);
    CHECK(adequacy(none, constant(48, 8.0), load, 0.9).shortfall_days == 2);
    CHECK(adequacy(none, constant(48, 0.0), load, 0.0).shortfall_days == 0);
    CHECK(adequacy(none, nuclear, load).percent_curtailed == 0.0);
}

TEST_CASE("bounds and errors") {
    const auto solar = synthetic_solar(24 * 14);
    const auto wind = synthetic_wind(24 * 14);
    const auto load = synthetic_load(24 * 14);
    const auto nuclear = synthetic_nuclear(24 * 14);
    for (double w : {0.0, 5.0, 20.0, 80.0}) {
        const auto r = adequacy(combine_vre(solar, wind, {w, w}), nuclear, load);
        CHECK(r.percent_supplied >= 0.0);
        CHECK(r.percent_supplied <= 1.0);
        CHECK(r.percent_curtailed >= 0.0);
        CHECK(r.percent_curtailed <= 1.0);
        CHECK(r.shortfall_days <= 14);
    }
    CHECK(kind_of([&] { adequacy(solar, nuclear, constant(24 * 14, 0.0)); }) == ErrorKind::ZeroLoad);
    CHECK(kind_of([&] { adequacy(solar, nuclear, constant(10, 1.0)); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("supplied fraction grows with either weight") {
    const auto solar = synthetic_solar();
    const auto wind = synthetic_wind();
    const auto load = synthetic_load();
    const auto nuclear = synthetic_nuclear();
    double last = -1.0;
    for (double ws = 0; ws <= 60; ws += 10) {
        const double s = adequacy(combine_vre(solar, wind, {ws, 20}), nuclear, load).percent_supplied;
        CHECK(s >= last);
        last = s;
    }
    last = -1.0;
    for (double ww = 0; ww <= 60; ww += 10) {
        const double s = adequacy(combine_vre(solar, wind, {20, ww}), nuclear, load).percent_supplied;
        CHECK(s >= last);
        last = s;
    }
}

TEST_CASE("weight ranges are inclusive") {
    CHECK(WeightRange{0, 1, 0.25}.points() == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
    CHECK(WeightRange{0, 0.3, 0.1}.points().size() == 4);
    CHECK(WeightRange{1, 0, 1}.points().empty());
    CHECK(WeightRange{0, 1, 0}.points().empty());
}

TEST_CASE("sweep ranks feasible weights") {
    const std::size_t n = 24 * 30;
    const auto solar = synthetic_solar(n);
    const auto wind = synthetic_wind(n);
    const auto load = synthetic_load(n);
    const auto nuclear = synthetic_nuclear(n);
    const auto sweep = weight_sweep(solar, wind, nuclear, load, 0.2, {0, 40, 10}, {0, 40, 10}, 0.9, 2);
    CHECK(sweep.all.size() == 25);
    CHECK(sweep.all[6].weights.solar == 10);
    CHECK(sweep.all[6].weights.wind == 10);
    for (const auto& e : sweep.all) CHECK(e.feasible == (e.result.percent_curtailed <= 0.2));
    for (std::size_t i = 1; i < sweep.ranked.size(); ++i) {
        CHECK(sweep.ranked[i - 1].result.percent_supplied >= sweep.ranked[i].result.percent_supplied);
    }
    REQUIRE_FALSE(sweep.ranked.empty());
    double best = 0.0;
    for (const auto& e : sweep.all) {
        if (e.feasible) best = std::max(best, e.result.percent_supplied);
    }
    CHECK(sweep.ranked.front().result.percent_supplied == best);

    const auto serial = weight_sweep(solar, wind, nuclear, load, 0.2, {0, 40, 10}, {0, 40, 10}, 0.9, 1);
    for (std::size_t i = 0; i < serial.all.size(); ++i) {
        CHECK(serial.all[i].result.percent_supplied == sweep.all[i].result.percent_supplied);
    }
    CHECK(kind_of([&] { weight_sweep(solar, wind, nuclear, load, 0.2, {1, 0, 1}, {0, 1, 1}); }) == ErrorKind::EmptyGrid);
}

TEST_CASE("ensemble adequacy pairs deterministically") {
    const std::size_t n = 24 * 20;
    const auto solar = synthetic_solar(n);
    const auto wind = synthetic_wind(n);
    const auto load = synthetic_load(n);
    const auto nuclear = synthetic_nuclear(n);
    const auto se = generate_sbb_batch(solar, SbbConfig{}, 5, 1, 1);
    const auto we = generate_sbb_batch(wind, SbbConfig{}, 4, 2, 1);
    const auto r1 = ensemble_adequacy(se.series, we.series, nuclear, load, {30, 20}, 17, 12, 0.9, 1);
    const auto r2 = ensemble_adequacy(se.series, we.series, nuclear, load, {30, 20}, 17, 12, 0.9, 3);
    REQUIRE(r1.pairs.size() == 12);
    CHECK(r1.pairs == r2.pairs);
    for (std::size_t b = 0; b < 12; ++b) {
        const auto [s, w] = r1.pairs[b];
        CHECK(s < 5);
        CHECK(w < 4);
        const auto direct = adequacy(combine_vre(se.series[s], we.series[w], {30, 20}), nuclear, load);
        CHECK(r1.results[b].shortfall_days == direct.shortfall_days);
        CHECK(r1.results[b].percent_supplied == direct.percent_supplied);
        CHECK(r2.results[b].percent_supplied == direct.percent_supplied);
    }
    CHECK(r1.shortfall_days.values.size() == 12);
    CHECK(ensemble_adequacy(se.series, we.series, nuclear, load, {30, 20}, 17).pairs.size() == 4);
}

TEST_CASE("seasonal windows") {
    const auto load = synthetic_load(24 * 10);
    const auto nuclear = synthetic_nuclear(24 * 10);
    const auto vre = combine_vre(synthetic_solar(24 * 10), synthetic_wind(24 * 10), {10, 10});
    const auto s = seasonal_adequacy(vre, nuclear, load, 48, 120);
    CHECK(s.load.size() == 120);
    CHECK(s.load[0] == load[48]);
    CHECK(s.result.shortfall_days <= 5);
    CHECK(kind_of([&] { seasonal_adequacy(vre, nuclear, load, 200, 100); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([&] { seasonal_adequacy(vre, nuclear, load, 0, 0); }) == ErrorKind::OutOfRange);
}

}  // TEST_SUITE
