#include "scalefree/perturbation.hpp"

#include <cmath>
#include <string>

#include "scalefree/error.hpp"

namespace scalefree {

std::string_view to_string(PerturbationKind kind) noexcept {
  switch (kind) {
    case PerturbationKind::Identity: return "identity";
    case PerturbationKind::Log: return "log";
    case PerturbationKind::Square: return "square";
    case PerturbationKind::Sqrt: return "sqrt";
    case PerturbationKind::Inverse: return "inverse";
  }
  return "unknown";
}

std::optional<PerturbationKind> parse_perturbation_kind(std::string_view s) noexcept {
  for (const auto kind : kAllPerturbations) {
    if (to_string(kind) == s) return kind;
  }
  return std::nullopt;
}

void PerturbationSpec::validate() const {
  if (!(std::isfinite(a) && a > 0.0) || !(std::isfinite(b) && b > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "perturbation constants must satisfy a > 0 and b > 0");
  }
}

std::vector<double> rescale_unit(ColumnView col) {
  const MinMaxParams p = fit_minmax(col);
  std::vector<double> out(col.size());
  transform_minmax(p, col, out);
  return out;
}

double apply_monotone(PerturbationKind kind, double shifted) noexcept {
  switch (kind) {
    case PerturbationKind::Identity: return shifted;
    case PerturbationKind::Log: return std::log(shifted);
    case PerturbationKind::Square: return shifted * shifted;
    case PerturbationKind::Sqrt: return std::sqrt(shifted);
    case PerturbationKind::Inverse: return 1.0 / shifted;
  }
  return shifted;
}

std::vector<double> apply_perturbation(ColumnView col, const PerturbationSpec& spec) {
  spec.validate();
  std::vector<double> out = rescale_unit(col);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = apply_monotone(spec.kind, shift_scale(out[i], spec));
    if (!std::isfinite(out[i])) {
      throw Error(ErrorCode::NonFiniteResult,
                  "perturbation '" + std::string(to_string(spec.kind)) + "' produced a non-finite value at row " +
                      std::to_string(i));
    }
  }
  return out;
}

Dataset perturb_dataset(const Dataset& data, const PerturbationSpec& spec) {
  Dataset out = data;
  for (auto& col : out.columns) col = apply_perturbation(col, spec);
  return out;
}

}  // namespace scalefree
