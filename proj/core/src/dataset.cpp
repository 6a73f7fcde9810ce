#include "scalefree/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "scalefree/error.hpp"

namespace scalefree {

namespace {

std::optional<double> parse_number(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

}  // namespace

Labels Labels::from_strings(const std::vector<std::string>& raw) {
  std::vector<std::string> distinct(raw.begin(), raw.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  const bool numeric = std::all_of(distinct.begin(), distinct.end(),
                                   [](const std::string& s) { return parse_number(s).has_value(); });
  if (numeric) {
    std::stable_sort(distinct.begin(), distinct.end(), [](const std::string& a, const std::string& b) {
      return *parse_number(a) < *parse_number(b);
    });
  }

  std::map<std::string, int> index;
  for (std::size_t i = 0; i < distinct.size(); ++i) index.emplace(distinct[i], static_cast<int>(i));

  Labels out;
  out.classes = std::move(distinct);
  out.codes.reserve(raw.size());
  for (const auto& s : raw) out.codes.push_back(index.at(s));
  return out;
}

void Dataset::validate() const {
  if (columns.empty() || columns.front().empty()) {
    throw Error(ErrorCode::EmptyDataset, "dataset '" + name + "' has no rows or no feature columns");
  }
  const std::size_t n = rows();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != n) {
      throw Error(ErrorCode::LengthMismatch, "column " + std::to_string(c) + " has " +
                                                 std::to_string(columns[c].size()) + " rows, expected " +
                                                 std::to_string(n));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (!std::isfinite(columns[c][r])) {
        throw Error(ErrorCode::NonFiniteValue,
                    "row " + std::to_string(r) + ", column " + std::to_string(c) + " is not finite");
      }
    }
  }
  if (labels && labels->size() != n) {
    throw Error(ErrorCode::LengthMismatch, "label count does not match row count");
  }
}

Dataset Dataset::subset(std::span<const std::size_t> rows_wanted) const {
  Dataset out;
  out.name = name;
  out.feature_names = feature_names;
  out.label_name = label_name;
  out.label_position = label_position;
  out.columns.resize(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out.columns[c].reserve(rows_wanted.size());
    for (const auto r : rows_wanted) out.columns[c].push_back(columns[c][r]);
  }
  if (labels) {
    Labels sub;
    sub.classes = labels->classes;
    sub.codes.reserve(rows_wanted.size());
    for (const auto r : rows_wanted) sub.codes.push_back(labels->codes[r]);
    out.labels = std::move(sub);
  }
  return out;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Matrix to_matrix(const Dataset& data) {
  Matrix m(data.rows(), data.cols());
  for (std::size_t c = 0; c < data.cols(); ++c) {
    for (std::size_t r = 0; r < data.rows(); ++r) m(r, c) = data.columns[c][r];
  }
  return m;
}

}  // namespace scalefree
