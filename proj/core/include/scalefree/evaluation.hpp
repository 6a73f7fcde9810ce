#pragma once

// Desk-scale evaluation: k-fold cross-validated KNN accuracy and LOF
// anomaly-detection AUC under a preprocessing x perturbation combination.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scalefree/dataset.hpp"
#include "scalefree/perturbation.hpp"
#include "scalefree/transformer.hpp"

namespace scalefree {

struct FoldAssignment {
  std::vector<std::size_t> fold_of_row;
  std::size_t k = 0;

  /// Row indices in fold `f` (ascending).
  [[nodiscard]] std::vector<std::size_t> test_rows(std::size_t f) const;
  /// Row indices outside fold `f` (ascending).
  [[nodiscard]] std::vector<std::size_t> train_rows(std::size_t f) const;
  [[nodiscard]] std::vector<std::size_t> fold_sizes() const;
};

/// Random permutation of the rows dealt round-robin into k folds, so fold
/// sizes differ by at most one. Throws InvalidArgument for k < 2 and
/// TooFewRows for n < k.
[[nodiscard]] FoldAssignment kfold_split(std::size_t n, std::size_t k, std::uint64_t seed);

inline constexpr std::size_t kDefaultKnnK = 5;
inline constexpr std::size_t kDefaultFolds = 10;

/// Majority vote among the k nearest training rows by Euclidean distance.
/// Distance ties go to the lower training row; vote ties to the smaller
/// label code.
[[nodiscard]] std::vector<int> knn_classify(const Matrix& train_x, std::span<const int> train_y,
                                            const Matrix& test_x, std::size_t k = kDefaultKnnK);

[[nodiscard]] double accuracy(std::span<const int> predicted, std::span<const int> truth);

/// Local outlier factor of every row against the others (larger = more
/// anomalous). The k-neighbourhood is every other row within the k-distance,
/// so it can hold more than k rows under ties. Local reachability density is
/// 1 / (mean reachability distance + 1e-10), which keeps duplicate-only
/// neighbourhoods finite.
[[nodiscard]] std::vector<double> lof_scores(const Matrix& x, std::size_t n_neighbors);

/// Mann-Whitney AUC with average ranks for ties. is_anomaly holds 0/1.
[[nodiscard]] double auc(std::span<const double> scores, std::span<const std::uint8_t> is_anomaly);

/// 0/1 anomaly flags from a two-class label column. The anomaly class is the
/// one named 1/true/yes/anomaly/anomalous/outlier/abnormal (case-insensitive),
/// otherwise the minority class.
[[nodiscard]] std::vector<std::uint8_t> anomaly_flags(const Labels& labels);

enum class MetricKind { Accuracy, Auc };
[[nodiscard]] std::string_view to_string(MetricKind kind) noexcept;

struct EvaluationReport {
  std::string dataset_name;
  TransformKind preprocessor = TransformKind::MinMax;
  PerturbationKind perturbation = PerturbationKind::Identity;
  MetricKind metric = MetricKind::Accuracy;
  std::vector<double> per_fold;  // empty for AUC
  double aggregate = 0.0;
  double wall_time_ms = 0.0;
  std::uint64_t seed = 0;
  /// Test values equal to a value the fitted model ranks against (per
  /// sub-sample for ARES, per column for rank). These are the points where
  /// an order-reversing perturbation does not exactly reverse the output.
  std::size_t sample_collisions = 0;

  friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

struct EvalConfig {
  std::size_t psi = kDefaultPsi;
  std::size_t t = kDefaultT;
  std::size_t knn_k = kDefaultKnnK;
  std::size_t folds = kDefaultFolds;
  /// Global seed; expanded with SeedPlan::from_global.
  std::uint64_t seed = 0;
  bool record_time = true;
};

/// Perturbs every feature column, then for each fold fits the preprocessor
/// on the training folds only and scores KNN on the held-out fold.
[[nodiscard]] EvaluationReport run_classification(const Dataset& data, TransformKind preprocessor,
                                                  const PerturbationSpec& perturbation,
                                                  const EvalConfig& config = {});

/// Perturbs, fits on all rows, scores LOF with n_neighbors = ceil(sqrt(N))
/// and reports AUC against the anomaly flags.
[[nodiscard]] EvaluationReport run_anomaly(const Dataset& data, TransformKind preprocessor,
                                           const PerturbationSpec& perturbation,
                                           const EvalConfig& config = {});

/// ceil(sqrt(n)) computed exactly in integers.
[[nodiscard]] std::size_t lof_neighbors_for(std::size_t n) noexcept;

}  // namespace scalefree
