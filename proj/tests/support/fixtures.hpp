#pragma once

#include "synthts/series.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace synthts::testing {

inline constexpr std::size_t kHoursPerYear = 8760;

// Deterministic PJM-shaped stand-ins for a year of hourly data. They only need the
// right texture (night zeros, diurnal and seasonal cycles, persistence), not the
// real levels.
HourlySeries synthetic_solar(std::size_t hours = kHoursPerYear, std::uint64_t seed = 1);
HourlySeries synthetic_wind(std::size_t hours = kHoursPerYear, std::uint64_t seed = 2);
HourlySeries synthetic_load(std::size_t hours = kHoursPerYear, std::uint64_t seed = 3);
HourlySeries synthetic_nuclear(std::size_t hours = kHoursPerYear, std::uint64_t seed = 4);

// Integer-valued random series; small ranges give many exact distance ties.
std::vector<double> random_integers(std::size_t n, int lo, int hi, std::uint64_t seed);
std::vector<double> random_reals(std::size_t n, double lo, double hi, std::uint64_t seed);

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag);
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const noexcept { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace synthts::testing
