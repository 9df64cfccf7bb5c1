#include "fixtures.hpp"

#include "synthts/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <unistd.h>

namespace synthts::testing {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Standard normal via Box-Muller on the portable uniform stream.
double gaussian(RandomStream& rng) {
    const double u1 = rng.uniform_open();
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double day_of_year(std::size_t hour) { return static_cast<double>(hour / 24); }

}  // namespace

HourlySeries synthetic_solar(std::size_t hours, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<double> v(hours);
    double cloud = 1.0;
    for (std::size_t t = 0; t < hours; ++t) {
        const double d = day_of_year(t);
        const double h = static_cast<double>(t % 24);
        if (t % 24 == 0) cloud = std::clamp(0.55 * cloud + 0.45 * (0.75 + 0.25 * gaussian(rng)), 0.15, 1.1);
        const double daylight = 12.0 + 3.0 * std::sin(kTwoPi * (d - 80.0) / 365.0);
        const double sunrise = 12.5 - daylight / 2.0;
        const double x = (h - sunrise) / daylight;
        double value = 0.0;
        if (x > 0.0 && x < 1.0) {
            const double peak = 2100.0 + 700.0 * std::sin(kTwoPi * (d - 80.0) / 365.0);
            value = std::round(peak * cloud * std::pow(std::sin(std::numbers::pi * x), 1.5) * 10.0) / 10.0;
            value = std::max(value, 0.0);
        }
        v[t] = value;
    }
    return HourlySeries(std::move(v), "solar", "2021-01-01T00:00", true);
}

HourlySeries synthetic_wind(std::size_t hours, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<double> v(hours);
    double state = 0.0;
    for (std::size_t t = 0; t < hours; ++t) {
        state = 0.97 * state + 0.243 * gaussian(rng);
        const double seasonal = 1.0 + 0.3 * std::cos(kTwoPi * day_of_year(t) / 365.0);
        const double level = 3100.0 * seasonal * std::exp(0.55 * state - 0.15);
        v[t] = std::round(std::clamp(level, 60.0, 9000.0) * 10.0) / 10.0;
    }
    return HourlySeries(std::move(v), "wind", "2021-01-01T00:00", true);
}

HourlySeries synthetic_load(std::size_t hours, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<double> v(hours);
    double noise = 0.0;
    for (std::size_t t = 0; t < hours; ++t) {
        noise = 0.9 * noise + 0.02 * gaussian(rng);
        const double h = static_cast<double>(t % 24);
        const double d = day_of_year(t);
        const double daily = 1.0 + 0.18 * std::sin(kTwoPi * (h - 9.0) / 24.0);
        const double seasonal = 1.0 + 0.15 * std::cos(2.0 * kTwoPi * (d - 20.0) / 365.0);
        v[t] = std::round(89000.0 * daily * seasonal * (1.0 + noise));
    }
    return HourlySeries(std::move(v), "load", "2021-01-01T00:00", true);
}

HourlySeries synthetic_nuclear(std::size_t hours, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<double> v(hours);
    double outage = 0.0;
    for (std::size_t t = 0; t < hours; ++t) {
        if (t % 24 == 0) outage = rng.uniform() < 0.05 ? 1100.0 * static_cast<double>(1 + rng.below(3)) : outage * 0.8;
        v[t] = std::round(32500.0 - outage + 150.0 * gaussian(rng));
    }
    return HourlySeries(std::move(v), "nuclear", "2021-01-01T00:00", true);
}

std::vector<double> random_integers(std::size_t n, int lo, int hi, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<double> v(n);
    const auto span = static_cast<std::size_t>(hi - lo + 1);
    for (auto& x : v) x = static_cast<double>(lo + static_cast<int>(rng.below(span)));
    return v;
}

std::vector<double> random_reals(std::size_t n, double lo, double hi, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = lo + (hi - lo) * rng.uniform();
    return v;
}

TempDir::TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("synthts_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << contents;
}

}  // namespace synthts::testing
