#include <gtest/gtest.h>

#include <algorithm>

#include "scalefree/error.hpp"
#include "scalefree/transformer.hpp"
#include "synthetic.hpp"

namespace scalefree {
namespace {

Dataset two_columns() {
  Dataset d;
  d.name = "two";
  d.feature_names = {"a", "b"};
  d.columns = {{1, 4, 2, 8}, {-3, 0, 5, 1}};
  return d;
}

TEST(FitMatrix, MinMaxColumnsIndependentlyInUnitRange) {
  const Dataset d = two_columns();
  const auto ft = fit_matrix(d, TransformKind::MinMax);
  const Dataset out = transform_matrix(ft, d);
  for (const auto& col : out.columns) {
    EXPECT_EQ(*std::min_element(col.begin(), col.end()), 0.0);
    EXPECT_EQ(*std::max_element(col.begin(), col.end()), 1.0);
  }
  EXPECT_EQ(out.columns[0], (std::vector<double>{0, 3.0 / 7.0, 1.0 / 7.0, 1}));
}

TEST(FitMatrix, RankOutputsStrictLessCounts) {
  const Dataset d = two_columns();
  const Dataset out = transform_matrix(fit_matrix(d, TransformKind::Rank), d);
  EXPECT_EQ(out.columns[0], (std::vector<double>{0, 2, 1, 3}));
  EXPECT_EQ(out.columns[1], (std::vector<double>{0, 1, 3, 2}));
}

TEST(TransformMatrix, ColumnCountMismatch) {
  Dataset three;
  three.columns = {{1, 2}, {3, 4}, {5, 6}};
  Dataset four = three;
  four.columns.push_back({7, 8});
  const auto ft = fit_matrix(three, TransformKind::Rank);
  try {
    (void)transform_matrix(ft, four);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ColumnCountMismatch);
  }
}

TEST(FitMatrix, EmptyDataset) {
  try {
    (void)fit_matrix(Dataset{}, TransformKind::MinMax);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyDataset);
  }
}

TEST(FitMatrix, AresDeterministicBitwise) {
  const Dataset d = testing::glass_shaped();
  const TransformParams params{7, 10, 1234};
  const auto a = fit_matrix(d, TransformKind::Ares, params);
  const auto b = fit_matrix(d, TransformKind::Ares, params);
  EXPECT_EQ(a, b);
  EXPECT_EQ(transform_matrix(a, d).columns, transform_matrix(b, d).columns);
  EXPECT_NE(a, fit_matrix(d, TransformKind::Ares, {7, 10, 1235}));
}

TEST(FitMatrix, AresColumnsUseTheirOwnStreams) {
  Dataset d;
  d.columns = {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}};
  const auto ft = fit_matrix(d, TransformKind::Ares, {3, 4, 77});
  EXPECT_EQ(std::get<AresModel>(ft.column(0)), fit_ares(d.columns[0], 3, 4, 77, 0));
  EXPECT_EQ(std::get<AresModel>(ft.column(1)), fit_ares(d.columns[1], 3, 4, 77, 1));
}

TEST(TransformMatrix, LabelsPassThrough) {
  const Dataset d = testing::glass_shaped();
  const Dataset out = transform_matrix(fit_matrix(d, TransformKind::Ares), d);
  EXPECT_EQ(out.labels, d.labels);
  EXPECT_EQ(out.feature_names, d.feature_names);
}

TEST(TransformKindNames, RoundTrip) {
  for (const auto k : {TransformKind::MinMax, TransformKind::Rank, TransformKind::Ares}) {
    EXPECT_EQ(parse_transform_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_transform_kind("zscore").has_value());
}

}  // namespace
}  // namespace scalefree
