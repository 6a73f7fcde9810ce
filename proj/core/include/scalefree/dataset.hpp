#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scalefree {

/// Class labels encoded as indices into an ordered list of distinct names.
/// The ordering is numeric when every name parses as a number, otherwise
/// lexicographic; it is the tie-break order used by KNN voting.
struct Labels {
  std::vector<std::string> classes;
  std::vector<int> codes;

  [[nodiscard]] static Labels from_strings(const std::vector<std::string>& raw);

  [[nodiscard]] std::size_t size() const noexcept { return codes.size(); }
  [[nodiscard]] const std::string& name_of(std::size_t row) const { return classes.at(codes.at(row)); }

  friend bool operator==(const Labels&, const Labels&) = default;
};

/// Column-oriented numeric matrix with an optional label column.
struct Dataset {
  std::string name;
  std::vector<std::string> feature_names;
  std::vector<std::vector<double>> columns;
  std::optional<Labels> labels;
  /// Name and original position of the label column, for writing the
  /// dataset back out in its input layout.
  std::string label_name;
  std::size_t label_position = 0;

  [[nodiscard]] std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return columns.size(); }

  /// Checks the shape invariants; throws EmptyDataset / LengthMismatch /
  /// NonFiniteValue.
  void validate() const;

  /// Rows `rows` (in that order) as a new dataset.
  [[nodiscard]] Dataset subset(std::span<const std::size_t> rows) const;
};

/// Dense row-major matrix for the distance-based learners.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c, 0.0) {}

  [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
    return {values.data() + i * cols, cols};
  }
  [[nodiscard]] std::span<double> row(std::size_t i) noexcept { return {values.data() + i * cols, cols}; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return values[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values[i * cols + j]; }

  [[nodiscard]] static Matrix from_rows(const std::vector<std::vector<double>>& rows);
};

[[nodiscard]] Matrix to_matrix(const Dataset& data);

}  // namespace scalefree
