#include "scalefree/transformer.hpp"

#include <string>

#include "scalefree/error.hpp"

namespace scalefree {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool matches(TransformKind kind, const ColumnModel& m) {
  switch (kind) {
    case TransformKind::MinMax: return std::holds_alternative<MinMaxParams>(m);
    case TransformKind::Rank: return std::holds_alternative<RankModel>(m);
    case TransformKind::Ares: return std::holds_alternative<AresModel>(m);
  }
  return false;
}

}  // namespace

std::string_view to_string(TransformKind kind) noexcept {
  switch (kind) {
    case TransformKind::MinMax: return "minmax";
    case TransformKind::Rank: return "rank";
    case TransformKind::Ares: return "ares";
  }
  return "unknown";
}

std::optional<TransformKind> parse_transform_kind(std::string_view s) noexcept {
  if (s == "minmax") return TransformKind::MinMax;
  if (s == "rank") return TransformKind::Rank;
  if (s == "ares") return TransformKind::Ares;
  return std::nullopt;
}

FittedTransformer::FittedTransformer(TransformKind kind, TransformParams params,
                                     std::vector<ColumnModel> columns)
    : kind_(kind), params_(params), columns_(std::move(columns)) {
  for (const auto& c : columns_) {
    if (!matches(kind_, c)) {
      throw Error(ErrorCode::InvalidArgument, "column model does not match transformer kind");
    }
  }
}

double FittedTransformer::transform_value(std::size_t column, double x) const {
  return std::visit(Overloaded{
                        [x](const MinMaxParams& p) { return transform_minmax(p, x); },
                        [x](const RankModel& m) { return transform_rank(m, x); },
                        [x](const AresModel& m) { return transform_ares(m, x); },
                    },
                    columns_.at(column));
}

FittedTransformer fit_matrix(const Dataset& data, TransformKind kind, const TransformParams& params) {
  if (data.rows() == 0 || data.cols() == 0) {
    throw Error(ErrorCode::EmptyDataset, "cannot fit on an empty dataset");
  }
  std::vector<ColumnModel> models;
  models.reserve(data.cols());
  for (std::size_t c = 0; c < data.cols(); ++c) {
    const ColumnView col = data.columns[c];
    switch (kind) {
      case TransformKind::MinMax: models.emplace_back(fit_minmax(col)); break;
      case TransformKind::Rank: models.emplace_back(fit_rank(col)); break;
      case TransformKind::Ares: models.emplace_back(fit_ares(col, params.psi, params.t, params.seed, c)); break;
    }
  }
  // Only ARES is parameterised; other kinds carry default params so that
  // fitted transformers compare equal regardless of unused settings.
  return FittedTransformer(kind, kind == TransformKind::Ares ? params : TransformParams{}, std::move(models));
}

Dataset transform_matrix(const FittedTransformer& ft, const Dataset& data) {
  if (data.cols() != ft.column_count()) {
    throw Error(ErrorCode::ColumnCountMismatch, "transformer was fit on " +
                                                    std::to_string(ft.column_count()) +
                                                    " columns, input has " + std::to_string(data.cols()));
  }
  Dataset out = data;
  for (std::size_t c = 0; c < data.cols(); ++c) {
    const ColumnView in = data.columns[c];
    std::span<double> dst = out.columns[c];
    std::visit(Overloaded{
                   [&](const MinMaxParams& p) { transform_minmax(p, in, dst); },
                   [&](const RankModel& m) { transform_rank(m, in, dst); },
                   [&](const AresModel& m) { transform_ares(m, in, dst); },
               },
               ft.column(c));
  }
  return out;
}

}  // namespace scalefree
