#pragma once

// Reference implementations used only by tests. Each one follows the
// textbook definition directly and shares no code with the library path it
// checks.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace scalefree::testing {

/// |{y in values : y < x}| by linear scan.
std::size_t count_less(std::span<const double> values, double x);

/// Fraction over all (anomaly, normal) pairs of score_a > score_n, ties 1/2.
double pairwise_auc(std::span<const double> scores, std::span<const std::uint8_t> flags);

/// LOF from the definition with a full distance matrix and full sorts.
std::vector<double> brute_force_lof(const std::vector<std::vector<double>>& points, std::size_t k);

/// Kolmogorov-Smirnov distance of the sample from Uniform(0, 1).
double ks_uniform(std::vector<double> sample);

}  // namespace scalefree::testing
