#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "scalefree/dataset.hpp"
#include "scalefree/transforms.hpp"

namespace scalefree {

enum class TransformKind { MinMax, Rank, Ares };

[[nodiscard]] std::string_view to_string(TransformKind kind) noexcept;
/// Accepts "minmax", "rank", "ares".
[[nodiscard]] std::optional<TransformKind> parse_transform_kind(std::string_view s) noexcept;

struct TransformParams {
  std::size_t psi = kDefaultPsi;
  std::size_t t = kDefaultT;
  std::uint64_t seed = 0;

  friend bool operator==(const TransformParams&, const TransformParams&) = default;
};

using ColumnModel = std::variant<MinMaxParams, RankModel, AresModel>;

/// One fitted model per feature column, immutable once built.
class FittedTransformer {
 public:
  FittedTransformer(TransformKind kind, TransformParams params, std::vector<ColumnModel> columns);

  [[nodiscard]] TransformKind kind() const noexcept { return kind_; }
  [[nodiscard]] const TransformParams& params() const noexcept { return params_; }
  [[nodiscard]] std::size_t column_count() const noexcept { return columns_.size(); }
  [[nodiscard]] const ColumnModel& column(std::size_t i) const { return columns_.at(i); }
  [[nodiscard]] const std::vector<ColumnModel>& columns() const noexcept { return columns_; }

  [[nodiscard]] double transform_value(std::size_t column, double x) const;

  friend bool operator==(const FittedTransformer&, const FittedTransformer&) = default;

 private:
  TransformKind kind_;
  TransformParams params_;
  std::vector<ColumnModel> columns_;
};

/// Fits each feature column independently. For ARES, column c uses
/// sub-sample seeds derive_seed(params.seed, c, j).
[[nodiscard]] FittedTransformer fit_matrix(const Dataset& data, TransformKind kind,
                                           const TransformParams& params = {});

/// Applies the fitted column models; labels and names pass through.
[[nodiscard]] Dataset transform_matrix(const FittedTransformer& ft, const Dataset& data);

}  // namespace scalefree
