#include "scalefree/evaluation.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <numeric>

#include "scalefree/error.hpp"
#include "scalefree/random.hpp"

namespace scalefree {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

struct Neighbor {
  double dist;
  std::size_t index;
  friend bool operator<(const Neighbor& l, const Neighbor& r) noexcept {
    return l.dist < r.dist || (l.dist == r.dist && l.index < r.index);
  }
};

std::size_t count_collisions(const FittedTransformer& ft, const Dataset& test) {
  std::size_t hits = 0;
  for (std::size_t c = 0; c < test.cols(); ++c) {
    const auto& model = ft.column(c);
    for (const double x : test.columns[c]) {
      if (const auto* a = std::get_if<AresModel>(&model)) {
        for (std::size_t j = 0; j < a->t(); ++j) {
          const auto s = a->subsample(j);
          hits += std::binary_search(s.begin(), s.end(), x) ? 1 : 0;
        }
      } else if (const auto* r = std::get_if<RankModel>(&model)) {
        hits += std::binary_search(r->sorted_train.begin(), r->sorted_train.end(), x) ? 1 : 0;
      }
    }
  }
  return hits;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<std::size_t> FoldAssignment::test_rows(std::size_t f) const {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < fold_of_row.size(); ++r) {
    if (fold_of_row[r] == f) rows.push_back(r);
  }
  return rows;
}

std::vector<std::size_t> FoldAssignment::train_rows(std::size_t f) const {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < fold_of_row.size(); ++r) {
    if (fold_of_row[r] != f) rows.push_back(r);
  }
  return rows;
}

std::vector<std::size_t> FoldAssignment::fold_sizes() const {
  std::vector<std::size_t> sizes(k, 0);
  for (const auto f : fold_of_row) ++sizes[f];
  return sizes;
}

FoldAssignment kfold_split(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "fold count must be at least 2");
  if (n < k) {
    throw Error(ErrorCode::TooFewRows,
                std::to_string(n) + " rows cannot fill " + std::to_string(k) + " folds");
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[static_cast<std::size_t>(rng.below(i + 1))]);
  }
  FoldAssignment out{std::vector<std::size_t>(n), k};
  for (std::size_t i = 0; i < n; ++i) out.fold_of_row[perm[i]] = i % k;
  return out;
}

std::vector<int> knn_classify(const Matrix& train_x, std::span<const int> train_y, const Matrix& test_x,
                              std::size_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (train_x.rows != train_y.size()) throw Error(ErrorCode::LengthMismatch, "one label per training row required");
  if (train_x.cols != test_x.cols) {
    throw Error(ErrorCode::DimensionMismatch, "train has " + std::to_string(train_x.cols) +
                                                  " columns, test has " + std::to_string(test_x.cols));
  }
  if (k > train_x.rows) {
    throw Error(ErrorCode::KExceedsTrainSize,
                "k=" + std::to_string(k) + " exceeds " + std::to_string(train_x.rows) + " training rows");
  }

  const int n_classes = train_y.empty() ? 0 : *std::max_element(train_y.begin(), train_y.end()) + 1;
  std::vector<Neighbor> cand(train_x.rows);
  std::vector<std::size_t> votes(static_cast<std::size_t>(n_classes));
  std::vector<int> predicted;
  predicted.reserve(test_x.rows);

  for (std::size_t q = 0; q < test_x.rows; ++q) {
    const auto query = test_x.row(q);
    for (std::size_t i = 0; i < train_x.rows; ++i) cand[i] = {squared_distance(query, train_x.row(i)), i};
    std::nth_element(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k - 1), cand.end());
    std::fill(votes.begin(), votes.end(), 0);
    for (std::size_t i = 0; i < k; ++i) ++votes[static_cast<std::size_t>(train_y[cand[i].index])];
    // max_element returns the first maximum, i.e. the smallest label code.
    predicted.push_back(static_cast<int>(std::max_element(votes.begin(), votes.end()) - votes.begin()));
  }
  return predicted;
}

double accuracy(std::span<const int> predicted, std::span<const int> truth) {
  if (predicted.size() != truth.size()) throw Error(ErrorCode::LengthMismatch, "prediction/truth lengths differ");
  if (predicted.empty()) throw Error(ErrorCode::Empty, "no predictions");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) hits += predicted[i] == truth[i] ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

std::vector<double> lof_scores(const Matrix& x, std::size_t n_neighbors) {
  if (n_neighbors < 1) throw Error(ErrorCode::InvalidArgument, "n_neighbors must be at least 1");
  const std::size_t n = x.rows;
  if (n <= n_neighbors) {
    throw Error(ErrorCode::TooFewRows, "LOF with n_neighbors=" + std::to_string(n_neighbors) + " needs more than " +
                                           std::to_string(n_neighbors) + " rows, got " + std::to_string(n));
  }

  std::vector<std::vector<Neighbor>> hood(n);
  std::vector<double> kdist(n);
  std::vector<Neighbor> cand;
  cand.reserve(n - 1);
  for (std::size_t p = 0; p < n; ++p) {
    cand.clear();
    for (std::size_t o = 0; o < n; ++o) {
      if (o != p) cand.push_back({std::sqrt(squared_distance(x.row(p), x.row(o))), o});
    }
    const auto kth = cand.begin() + static_cast<std::ptrdiff_t>(n_neighbors - 1);
    std::nth_element(cand.begin(), kth, cand.end());
    kdist[p] = kth->dist;
    for (const auto& c : cand) {
      if (c.dist <= kdist[p]) hood[p].push_back(c);
    }
    std::sort(hood[p].begin(), hood[p].end());
  }

  constexpr double kDensityGuard = 1e-10;
  std::vector<double> lrd(n);
  for (std::size_t p = 0; p < n; ++p) {
    double reach = 0.0;
    for (const auto& o : hood[p]) reach += std::max(kdist[o.index], o.dist);
    lrd[p] = 1.0 / (reach / static_cast<double>(hood[p].size()) + kDensityGuard);
  }

  std::vector<double> lof(n);
  for (std::size_t p = 0; p < n; ++p) {
    double sum = 0.0;
    for (const auto& o : hood[p]) sum += lrd[o.index];
    lof[p] = sum / static_cast<double>(hood[p].size()) / lrd[p];
  }
  return lof;
}

double auc(std::span<const double> scores, std::span<const std::uint8_t> is_anomaly) {
  if (scores.size() != is_anomaly.size()) throw Error(ErrorCode::LengthMismatch, "one flag per score required");
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  double positive_rank_sum = 0.0;
  std::size_t positives = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    // 1-based ranks i+1..j share their average.
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t m = i; m < j; ++m) {
      if (is_anomaly[order[m]]) {
        positive_rank_sum += avg_rank;
        ++positives;
      }
    }
    i = j;
  }
  const std::size_t negatives = n - positives;
  if (positives == 0 || negatives == 0) {
    throw Error(ErrorCode::SingleClass, "AUC needs at least one anomaly and one normal instance");
  }
  const double np = static_cast<double>(positives);
  const double nn = static_cast<double>(negatives);
  return (positive_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

std::vector<std::uint8_t> anomaly_flags(const Labels& labels) {
  if (labels.classes.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "anomaly labels must have exactly two classes, found " +
                                                std::to_string(labels.classes.size()));
  }
  static constexpr std::string_view kAnomalyNames[] = {"1",         "true",    "yes",     "anomaly",
                                                       "anomalous", "outlier", "abnormal"};
  int positive = -1;
  for (int c = 0; c < 2 && positive < 0; ++c) {
    const auto name = lower(labels.classes[static_cast<std::size_t>(c)]);
    if (std::find(std::begin(kAnomalyNames), std::end(kAnomalyNames), name) != std::end(kAnomalyNames)) {
      positive = c;
    }
  }
  if (positive < 0) {
    const auto ones = static_cast<std::size_t>(std::count(labels.codes.begin(), labels.codes.end(), 1));
    positive = ones <= labels.codes.size() - ones ? 1 : 0;
  }
  std::vector<std::uint8_t> flags(labels.codes.size());
  for (std::size_t i = 0; i < flags.size(); ++i) flags[i] = labels.codes[i] == positive ? 1 : 0;
  return flags;
}

std::string_view to_string(MetricKind kind) noexcept {
  return kind == MetricKind::Accuracy ? "accuracy" : "auc";
}

std::size_t lof_neighbors_for(std::size_t n) noexcept {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while (r * r < n) ++r;
  return r;
}

EvaluationReport run_classification(const Dataset& data, TransformKind preprocessor,
                                    const PerturbationSpec& perturbation, const EvalConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  data.validate();
  if (!data.labels) throw Error(ErrorCode::MissingLabels, "classification needs a label column");

  const SeedPlan seeds = SeedPlan::from_global(config.seed);
  const Dataset perturbed = perturb_dataset(data, perturbation);
  const FoldAssignment folds = kfold_split(data.rows(), config.folds, seeds.fold_seed);
  const TransformParams params{config.psi, config.t, seeds.ares_seed};

  EvaluationReport report;
  report.dataset_name = data.name;
  report.preprocessor = preprocessor;
  report.perturbation = perturbation.kind;
  report.metric = MetricKind::Accuracy;
  report.seed = config.seed;

  for (std::size_t f = 0; f < folds.k; ++f) {
    const auto train_rows = folds.train_rows(f);
    const auto test_rows = folds.test_rows(f);
    const Dataset train = perturbed.subset(train_rows);
    const Dataset test = perturbed.subset(test_rows);

    const FittedTransformer ft = fit_matrix(train, preprocessor, params);
    const Matrix train_x = to_matrix(transform_matrix(ft, train));
    const Matrix test_x = to_matrix(transform_matrix(ft, test));
    const auto predicted = knn_classify(train_x, train.labels->codes, test_x, config.knn_k);
    report.per_fold.push_back(accuracy(predicted, test.labels->codes));
    report.sample_collisions += count_collisions(ft, test);
  }
  report.aggregate = std::accumulate(report.per_fold.begin(), report.per_fold.end(), 0.0) /
                     static_cast<double>(report.per_fold.size());
  report.wall_time_ms = config.record_time ? elapsed_ms(start) : 0.0;
  return report;
}

EvaluationReport run_anomaly(const Dataset& data, TransformKind preprocessor, const PerturbationSpec& perturbation,
                             const EvalConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  data.validate();
  if (!data.labels) throw Error(ErrorCode::MissingLabels, "anomaly detection needs an anomaly label column");
  const auto flags = anomaly_flags(*data.labels);

  const SeedPlan seeds = SeedPlan::from_global(config.seed);
  const Dataset perturbed = perturb_dataset(data, perturbation);
  const FittedTransformer ft = fit_matrix(perturbed, preprocessor, {config.psi, config.t, seeds.ares_seed});
  const Matrix x = to_matrix(transform_matrix(ft, perturbed));
  const auto scores = lof_scores(x, lof_neighbors_for(data.rows()));

  EvaluationReport report;
  report.dataset_name = data.name;
  report.preprocessor = preprocessor;
  report.perturbation = perturbation.kind;
  report.metric = MetricKind::Auc;
  report.aggregate = auc(scores, flags);
  report.seed = config.seed;
  report.wall_time_ms = config.record_time ? elapsed_ms(start) : 0.0;
  return report;
}

}  // namespace scalefree
