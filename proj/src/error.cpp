#include "synthts/error.hpp"

namespace synthts {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::MissingColumn: return "MissingColumn";
        case ErrorKind::UnparseableValue: return "UnparseableValue";
        case ErrorKind::EmptyFile: return "EmptyFile";
        case ErrorKind::Io: return "Io";
        case ErrorKind::InvalidSeries: return "InvalidSeries";
        case ErrorKind::InvalidChunkLength: return "InvalidChunkLength";
        case ErrorKind::InvalidLag: return "InvalidLag";
        case ErrorKind::KTooLarge: return "KTooLarge";
        case ErrorKind::InvalidSash: return "InvalidSash";
        case ErrorKind::PTooLarge: return "PTooLarge";
        case ErrorKind::InvalidKernel: return "InvalidKernel";
        case ErrorKind::InvalidDistributionParams: return "InvalidDistributionParams";
        case ErrorKind::InvalidProbability: return "InvalidProbability";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::SeriesTooShort: return "SeriesTooShort";
        case ErrorKind::ZeroLoad: return "ZeroLoad";
        case ErrorKind::EmptyGrid: return "EmptyGrid";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Config: return "Config";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> row)
    : std::runtime_error(message), kind_(kind), row_(row) {}

}  // namespace synthts
