#include "synthts/series.hpp"

#include "synthts/error.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>

namespace synthts {

HourlySeries::HourlySeries(std::vector<double> values, std::string label,
                           std::optional<std::string> start_timestamp, bool non_negative)
    : values_(std::move(values)),
      label_(std::move(label)),
      start_timestamp_(std::move(start_timestamp)),
      non_negative_(non_negative) {
    if (values_.empty()) {
        throw Error(ErrorKind::InvalidSeries, "series must contain at least one value");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw Error(ErrorKind::InvalidSeries, "series value at position " + std::to_string(i) + " is not finite");
        }
        if (non_negative_ && values_[i] < 0.0) {
            throw Error(ErrorKind::InvalidSeries,
                        "series flagged non-negative has negative value at position " + std::to_string(i));
        }
    }
}

HourlySeries HourlySeries::with_values(std::vector<double> values) const {
    return HourlySeries(std::move(values), label_, start_timestamp_, non_negative_);
}

HourlySeries HourlySeries::with_label(std::string label) const {
    HourlySeries copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

double circular_get(std::span<const double> values, std::int64_t index) {
    const auto n = static_cast<std::int64_t>(values.size());
    std::int64_t r = index % n;
    if (r < 0) r += n;
    return values[static_cast<std::size_t>(r)];
}

double circular_get(const HourlySeries& series, std::int64_t index) {
    return circular_get(series.values(), index);
}

std::vector<double> ChunkedSeries::totals() const {
    std::vector<double> out;
    out.reserve(chunks.size());
    for (const auto& c : chunks) {
        double s = 0.0;
        for (double v : c) s += v;
        out.push_back(s);
    }
    return out;
}

ChunkedSeries chunk(std::span<const double> values, std::size_t l, RaggedEnd ragged) {
    const std::size_t n = values.size();
    if (l == 0 || l > n) {
        throw Error(ErrorKind::InvalidChunkLength,
                    "chunk length " + std::to_string(l) + " must be in [1, " + std::to_string(n) + "]");
    }
    ChunkedSeries out;
    out.chunk_length = l;
    const std::size_t full = n / l;
    const bool ragged_tail = n % l != 0;
    const std::size_t count = (ragged_tail && ragged == RaggedEnd::Wrap) ? full + 1 : full;
    out.chunks.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<double> block(l);
        for (std::size_t j = 0; j < l; ++j) block[j] = values[(c * l + j) % n];
        out.chunks.push_back(std::move(block));
    }
    out.wrapped = ragged_tail && ragged == RaggedEnd::Wrap;
    return out;
}

ChunkedSeries chunk(const HourlySeries& series, std::size_t l, RaggedEnd ragged) {
    return chunk(series.values(), l, ragged);
}

std::vector<double> flatten(const ChunkedSeries& chunked, std::size_t source_length) {
    std::vector<double> out;
    out.reserve(chunked.chunks.size() * chunked.chunk_length);
    for (const auto& c : chunked.chunks) out.insert(out.end(), c.begin(), c.end());
    if (out.size() > source_length) out.resize(source_length);
    return out;
}

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n\"");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n\"");
    return std::string(s.substr(first, last - first + 1));
}

// Comma split honouring double-quoted fields (PJM exports quote timestamps).
std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
        } else if (ch == ',' && !quoted) {
            cells.push_back(trim(cell));
            cell.clear();
        } else {
            cell.push_back(ch);
        }
    }
    cells.push_back(trim(cell));
    return cells;
}

std::optional<double> parse_double(const std::string& text) {
    if (text.empty()) return std::nullopt;
    double v = 0.0;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    if (*begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name,
                        const std::filesystem::path& path) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        throw Error(ErrorKind::MissingColumn, "column '" + name + "' not found in " + path.string());
    }
    return static_cast<std::size_t>(std::distance(header.begin(), it));
}

std::string to_hex(const unsigned char* data, unsigned int len) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(digits[data[i] >> 4]);
        out.push_back(digits[data[i] & 0x0f]);
    }
    return out;
}

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
        if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
            throw Error(ErrorKind::Io, "failed to initialise SHA-256");
        }
    }
    void update(const void* data, std::size_t len) { EVP_DigestUpdate(ctx_.get(), data, len); }
    std::string hex() {
        std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
        unsigned int len = 0;
        EVP_DigestFinal_ex(ctx_.get(), md.data(), &len);
        return to_hex(md.data(), len);
    }

private:
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

}  // namespace

HourlySeries load_csv(const std::filesystem::path& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());

    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        if (!trim(line).empty()) {
            if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF) line.erase(0, 3);  // UTF-8 BOM
            header = split_csv_line(line);
            break;
        }
    }
    if (header.empty()) throw Error(ErrorKind::EmptyFile, path.string() + " is empty");

    const std::size_t value_idx = find_column(header, options.value_column, path);
    std::optional<std::size_t> ts_idx;
    if (options.timestamp_column) ts_idx = find_column(header, *options.timestamp_column, path);

    std::vector<double> values;
    std::optional<std::string> start_timestamp;
    std::size_t row = 0;
    std::optional<std::size_t> blank_row;  // trailing blank lines are fine, interior ones are missing values
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) {
            if (!blank_row) blank_row = row;
            continue;
        }
        if (blank_row) {
            throw Error(ErrorKind::UnparseableValue, path.string() + ": row " + std::to_string(*blank_row) + " is blank",
                        blank_row);
        }
        const auto cells = split_csv_line(line);
        const std::string cell = value_idx < cells.size() ? cells[value_idx] : std::string{};
        const auto v = parse_double(cell);
        if (!v) {
            throw Error(ErrorKind::UnparseableValue,
                        path.string() + ": row " + std::to_string(row) + " has unparseable value '" + cell + "'", row);
        }
        if (row == 1 && ts_idx && *ts_idx < cells.size()) start_timestamp = cells[*ts_idx];
        values.push_back(*v);
    }
    if (values.empty()) throw Error(ErrorKind::EmptyFile, path.string() + " has a header but no data rows");

    std::string label = options.label.empty() ? path.stem().string() : options.label;
    return HourlySeries(std::move(values), std::move(label), std::move(start_timestamp), options.non_negative);
}

std::string format_value(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

void write_csv(const std::filesystem::path& path, const HourlySeries& series, bool with_hour_index) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    std::string text = with_hour_index ? "hour,value\n" : "value\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (with_hour_index) {
            text += std::to_string(i);
            text += ',';
        }
        text += format_value(series[i]);
        text += '\n';
    }
    out << text;
    if (!out) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

std::string checksum(const HourlySeries& series) {
    Sha256 sha;
    for (double v : series.values()) {
        std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
        std::array<unsigned char, 8> le{};
        for (int b = 0; b < 8; ++b) le[b] = static_cast<unsigned char>(bits >> (8 * b));
        sha.update(le.data(), le.size());
    }
    return sha.hex();
}

std::string file_checksum(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    Sha256 sha;
    std::array<char, 1 << 16> buf{};
    while (in) {
        in.read(buf.data(), buf.size());
        if (in.gcount() > 0) sha.update(buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    return sha.hex();
}

}  // namespace synthts
