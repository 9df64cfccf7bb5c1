#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace synthts {

/**
 * Ordered hourly observations (MW or MWh/h).
 *
 * Immutable after construction: at least one value, every value finite, and
 * every value >= 0 when constructed with `non_negative = true`. Positions are
 * 0-based; `circular_get` wraps any integer index onto the series.
 */
class HourlySeries {
public:
    explicit HourlySeries(std::vector<double> values, std::string label = {},
                          std::optional<std::string> start_timestamp = std::nullopt,
                          bool non_negative = false);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    const std::string& label() const noexcept { return label_; }
    const std::optional<std::string>& start_timestamp() const noexcept { return start_timestamp_; }
    bool non_negative() const noexcept { return non_negative_; }

    // Copy with the same metadata but different values (re-validated).
    HourlySeries with_values(std::vector<double> values) const;
    HourlySeries with_label(std::string label) const;

    bool operator==(const HourlySeries& other) const noexcept { return values_ == other.values_; }

private:
    std::vector<double> values_;
    std::string label_;
    std::optional<std::string> start_timestamp_;
    bool non_negative_ = false;
};

// values[index mod n] with a non-negative modulus, for any integer index.
double circular_get(const HourlySeries& series, std::int64_t index);
double circular_get(std::span<const double> values, std::int64_t index);

enum class RaggedEnd {
    Wrap,      // complete the final chunk with values from the series start
    Truncate,  // drop the incomplete final chunk
};

struct ChunkedSeries {
    std::vector<std::vector<double>> chunks;
    std::size_t chunk_length = 0;
    bool wrapped = false;  // true when the final chunk contains wrap padding

    std::size_t size() const noexcept { return chunks.size(); }
    std::vector<double> totals() const;
};

// Sequential chunks of length l, ceil(n / l) of them under RaggedEnd::Wrap.
// Throws InvalidChunkLength unless 1 <= l <= n.
ChunkedSeries chunk(std::span<const double> values, std::size_t l, RaggedEnd ragged = RaggedEnd::Wrap);
ChunkedSeries chunk(const HourlySeries& series, std::size_t l, RaggedEnd ragged = RaggedEnd::Wrap);

// Chunk concatenation cut back to `source_length`; inverse of chunk() on values.
std::vector<double> flatten(const ChunkedSeries& chunked, std::size_t source_length);

struct CsvOptions {
    std::string value_column = "value";
    std::optional<std::string> timestamp_column;
    std::string label;
    bool non_negative = false;
};

// Reads one value column from a headed CSV. Blank, NaN or non-numeric cells fail with
// UnparseableValue carrying the 1-based data row number.
HourlySeries load_csv(const std::filesystem::path& path, const CsvOptions& options = {});

// Writes `value` (or `hour,value` when `with_hour_index`) using the shortest
// round-trip representation of each double.
void write_csv(const std::filesystem::path& path, const HourlySeries& series, bool with_hour_index = false);

std::string format_value(double v);

// SHA-256 over the little-endian IEEE-754 bit patterns of the values, as lowercase hex.
std::string checksum(const HourlySeries& series);
// SHA-256 of the raw file bytes, as lowercase hex.
std::string file_checksum(const std::filesystem::path& path);

}  // namespace synthts
