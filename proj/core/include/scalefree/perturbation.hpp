#pragma once

// Monotone rescalings that simulate the same quantity recorded in a
// different unit or scale. Every column is first mapped onto [0, 1], then
// shifted and scaled to x' = b * (x + a) > 0, then passed through the
// chosen function.

#include <optional>
#include <string_view>
#include <vector>

#include "scalefree/dataset.hpp"
#include "scalefree/transforms.hpp"

namespace scalefree {

enum class PerturbationKind { Identity, Log, Square, Sqrt, Inverse };

[[nodiscard]] std::string_view to_string(PerturbationKind kind) noexcept;
[[nodiscard]] std::optional<PerturbationKind> parse_perturbation_kind(std::string_view s) noexcept;

inline constexpr PerturbationKind kAllPerturbations[] = {
    PerturbationKind::Identity, PerturbationKind::Log, PerturbationKind::Square,
    PerturbationKind::Sqrt, PerturbationKind::Inverse};

/// True for kinds that are strictly increasing on x' > 0.
[[nodiscard]] constexpr bool is_order_preserving(PerturbationKind kind) noexcept {
  return kind != PerturbationKind::Inverse;
}

struct PerturbationSpec {
  PerturbationKind kind = PerturbationKind::Identity;
  double a = 0.0001;
  double b = 100.0;

  /// Throws InvalidArgument unless a > 0 and b > 0 (both finite).
  void validate() const;
};

[[nodiscard]] std::vector<double> rescale_unit(ColumnView col);

[[nodiscard]] constexpr double shift_scale(double x, const PerturbationSpec& spec) noexcept {
  return spec.b * (x + spec.a);
}

/// The monotone function alone, applied to an already shifted value x' > 0.
[[nodiscard]] double apply_monotone(PerturbationKind kind, double shifted) noexcept;

[[nodiscard]] std::vector<double> apply_perturbation(ColumnView col, const PerturbationSpec& spec);

/// Applies one spec to every feature column; labels are untouched.
[[nodiscard]] Dataset perturb_dataset(const Dataset& data, const PerturbationSpec& spec);

}  // namespace scalefree
