#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace synthts {

enum class ErrorKind {
    MissingColumn,
    UnparseableValue,
    EmptyFile,
    Io,
    InvalidSeries,
    InvalidChunkLength,
    InvalidLag,
    KTooLarge,
    InvalidSash,
    PTooLarge,
    InvalidKernel,
    InvalidDistributionParams,
    InvalidProbability,
    LengthMismatch,
    SeriesTooShort,
    ZeroLoad,
    EmptyGrid,
    OutOfRange,
    InvalidArgument,
    Config,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library. `kind()` identifies the failure class;
// `row()` is set for UnparseableValue (1-based data row, header excluded).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> row = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> row() const noexcept { return row_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> row_;
};

}  // namespace synthts
