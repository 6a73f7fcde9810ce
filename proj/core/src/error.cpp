#include "scalefree/error.hpp"

namespace scalefree {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyColumn: return "EmptyColumn";
    case ErrorCode::PsiNonPositive: return "PsiNonPositive";
    case ErrorCode::PsiTooLarge: return "PsiTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ColumnCountMismatch: return "ColumnCountMismatch";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::NonFiniteResult: return "NonFiniteResult";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::KExceedsTrainSize: return "KExceedsTrainSize";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::MissingLabels: return "MissingLabels";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::MissingLabelColumn: return "MissingLabelColumn";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::CorruptModel: return "CorruptModel";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace scalefree
