#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scalefree {

enum class ErrorCode {
  EmptyColumn,
  PsiNonPositive,
  PsiTooLarge,
  InvalidArgument,
  ColumnCountMismatch,
  EmptyDataset,
  NonFiniteResult,
  TooFewRows,
  DimensionMismatch,
  KExceedsTrainSize,
  LengthMismatch,
  Empty,
  SingleClass,
  MissingLabels,
  ParseError,
  NonFiniteValue,
  MissingLabelColumn,
  EmptyFile,
  UnsupportedVersion,
  CorruptModel,
  IoError,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so CLI diagnostics name the
/// violated contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scalefree
