#pragma once

// Column-wise preprocessing kernels: min-max scaling, traditional rank and
// ARES (average rank over an ensemble of sub-samples).
//
// Rank semantics are shared by both rank-based transforms: the rank of x in a
// sorted set S is |{y in S : y < x}|, i.e. the lower-bound index of x.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace scalefree {

using ColumnView = std::span<const double>;

struct MinMaxParams {
  double min = 0.0;
  double max = 0.0;

  friend bool operator==(const MinMaxParams&, const MinMaxParams&) = default;
};

struct RankModel {
  std::vector<double> sorted_train;

  friend bool operator==(const RankModel&, const RankModel&) = default;
};

/// t sorted sub-samples of size psi, stored contiguously (sub-sample j
/// occupies [j*psi, (j+1)*psi)).
class AresModel {
 public:
  AresModel() = default;
  /// Validates shape and per-sub-sample ordering; throws InvalidArgument.
  AresModel(std::size_t psi, std::size_t t, std::uint64_t seed, std::vector<double> samples);

  [[nodiscard]] std::size_t psi() const noexcept { return psi_; }
  [[nodiscard]] std::size_t t() const noexcept { return t_; }
  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::span<const double> subsample(std::size_t j) const noexcept {
    return {samples_.data() + j * psi_, psi_};
  }
  [[nodiscard]] std::span<const double> flat() const noexcept { return samples_; }

  friend bool operator==(const AresModel&, const AresModel&) = default;

 private:
  std::size_t psi_ = 0;
  std::size_t t_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<double> samples_;
};

inline constexpr std::size_t kDefaultPsi = 7;
inline constexpr std::size_t kDefaultT = 10;

// Min-max

[[nodiscard]] MinMaxParams fit_minmax(ColumnView col);
/// (x - min) / (max - min); 0.0 for a constant fit column. Not clamped.
[[nodiscard]] double transform_minmax(const MinMaxParams& p, double x) noexcept;

// Traditional rank

[[nodiscard]] RankModel fit_rank(ColumnView col);
[[nodiscard]] double transform_rank(const RankModel& m, double x) noexcept;

// ARES

/// Row indices of a uniform sample of psi distinct rows out of n, in
/// ascending order. Depends only on (n, psi, stream_seed).
[[nodiscard]] std::vector<std::size_t> sample_indices(std::size_t n, std::size_t psi,
                                                      std::uint64_t stream_seed);

/// Values at sample_indices(col.size(), psi, stream_seed), sorted.
[[nodiscard]] std::vector<double> draw_subsample(ColumnView col, std::size_t psi,
                                                 std::uint64_t stream_seed);

/// Sub-sample j of column `column_index` is drawn with
/// derive_seed(seed, column_index, j).
[[nodiscard]] AresModel fit_ares(ColumnView col, std::size_t psi, std::size_t t,
                                 std::uint64_t seed, std::size_t column_index = 0);

[[nodiscard]] std::size_t rank_in_subsample(std::span<const double> sample, double x) noexcept;

/// Exact integer sum of the per-sub-sample ranks, in [0, psi * t].
[[nodiscard]] std::uint64_t ares_rank_sum(const AresModel& m, double x) noexcept;

/// ares_rank_sum(m, x) / t.
[[nodiscard]] double transform_ares(const AresModel& m, double x) noexcept;

// Batch forms; out.size() must equal in.size().

void transform_minmax(const MinMaxParams& p, ColumnView in, std::span<double> out) noexcept;
void transform_rank(const RankModel& m, ColumnView in, std::span<double> out) noexcept;
void transform_ares(const AresModel& m, ColumnView in, std::span<double> out) noexcept;

}  // namespace scalefree
