#include "scalefree/transforms.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "scalefree/error.hpp"
#include "scalefree/random.hpp"

namespace scalefree {

namespace {

void require_nonempty(ColumnView col) {
  if (col.empty()) throw Error(ErrorCode::EmptyColumn, "column has no values");
}

void check_psi(std::size_t n, std::size_t psi) {
  if (psi < 1) throw Error(ErrorCode::PsiNonPositive, "psi must be at least 1");
  if (psi > n) {
    throw Error(ErrorCode::PsiTooLarge,
                "psi=" + std::to_string(psi) + " exceeds column length " + std::to_string(n));
  }
}

}  // namespace

AresModel::AresModel(std::size_t psi, std::size_t t, std::uint64_t seed,
                     std::vector<double> samples)
    : psi_(psi), t_(t), seed_(seed), samples_(std::move(samples)) {
  if (psi_ < 1 || t_ < 1) throw Error(ErrorCode::InvalidArgument, "psi and t must be positive");
  if (samples_.size() != psi_ * t_) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(psi_ * t_) +
                                                " sampled values, got " +
                                                std::to_string(samples_.size()));
  }
  for (std::size_t j = 0; j < t_; ++j) {
    const auto s = subsample(j);
    if (!std::is_sorted(s.begin(), s.end())) {
      throw Error(ErrorCode::InvalidArgument,
                  "sub-sample " + std::to_string(j) + " is not sorted");
    }
  }
}

MinMaxParams fit_minmax(ColumnView col) {
  require_nonempty(col);
  const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
  return {*lo, *hi};
}

double transform_minmax(const MinMaxParams& p, double x) noexcept {
  if (p.max == p.min) return 0.0;
  return (x - p.min) / (p.max - p.min);
}

RankModel fit_rank(ColumnView col) {
  require_nonempty(col);
  RankModel m{{col.begin(), col.end()}};
  std::sort(m.sorted_train.begin(), m.sorted_train.end());
  return m;
}

double transform_rank(const RankModel& m, double x) noexcept {
  const auto it = std::lower_bound(m.sorted_train.begin(), m.sorted_train.end(), x);
  return static_cast<double>(it - m.sorted_train.begin());
}

// Floyd's algorithm: O(psi) draws, independent of n.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t psi,
                                        std::uint64_t stream_seed) {
  check_psi(n, psi);
  Rng rng(stream_seed);
  std::vector<std::size_t> chosen;
  chosen.reserve(psi);

  constexpr std::size_t kLinearLimit = 64;
  if (psi <= kLinearLimit) {
    for (std::size_t j = n - psi; j < n; ++j) {
      const auto r = static_cast<std::size_t>(rng.below(j + 1));
      const bool seen = std::find(chosen.begin(), chosen.end(), r) != chosen.end();
      chosen.push_back(seen ? j : r);
    }
  } else {
    std::unordered_set<std::size_t> seen;
    seen.reserve(psi * 2);
    for (std::size_t j = n - psi; j < n; ++j) {
      const auto r = static_cast<std::size_t>(rng.below(j + 1));
      const std::size_t pick = seen.contains(r) ? j : r;
      seen.insert(pick);
      chosen.push_back(pick);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<double> draw_subsample(ColumnView col, std::size_t psi, std::uint64_t stream_seed) {
  const auto idx = sample_indices(col.size(), psi, stream_seed);
  std::vector<double> values;
  values.reserve(idx.size());
  for (const auto i : idx) values.push_back(col[i]);
  std::sort(values.begin(), values.end());
  return values;
}

AresModel fit_ares(ColumnView col, std::size_t psi, std::size_t t, std::uint64_t seed,
                   std::size_t column_index) {
  require_nonempty(col);
  check_psi(col.size(), psi);
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be at least 1");

  std::vector<double> samples;
  samples.reserve(psi * t);
  for (std::size_t j = 0; j < t; ++j) {
    const auto s = draw_subsample(col, psi, derive_seed(seed, column_index, j));
    samples.insert(samples.end(), s.begin(), s.end());
  }
  return AresModel(psi, t, seed, std::move(samples));
}

// Branchless lower bound; sub-samples are small and query order is arbitrary,
// so a data-dependent branch mispredicts about half the time.
std::size_t rank_in_subsample(std::span<const double> sample, double x) noexcept {
  const double* base = sample.data();
  std::size_t n = sample.size();
  if (n == 0) return 0;
  while (n > 1) {
    const std::size_t half = n / 2;
    base = base[half - 1] < x ? base + half : base;
    n -= half;
  }
  return static_cast<std::size_t>(base - sample.data()) + (*base < x ? 1 : 0);
}

std::uint64_t ares_rank_sum(const AresModel& m, double x) noexcept {
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j < m.t(); ++j) sum += rank_in_subsample(m.subsample(j), x);
  return sum;
}

double transform_ares(const AresModel& m, double x) noexcept {
  return static_cast<double>(ares_rank_sum(m, x)) / static_cast<double>(m.t());
}

void transform_minmax(const MinMaxParams& p, ColumnView in, std::span<double> out) noexcept {
  std::transform(in.begin(), in.end(), out.begin(),
                 [&p](double x) { return transform_minmax(p, x); });
}

void transform_rank(const RankModel& m, ColumnView in, std::span<double> out) noexcept {
  std::transform(in.begin(), in.end(), out.begin(),
                 [&m](double x) { return transform_rank(m, x); });
}

void transform_ares(const AresModel& m, ColumnView in, std::span<double> out) noexcept {
  std::transform(in.begin(), in.end(), out.begin(),
                 [&m](double x) { return transform_ares(m, x); });
}

}  // namespace scalefree
