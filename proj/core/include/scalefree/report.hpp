#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "scalefree/evaluation.hpp"

namespace scalefree {

enum class ReportFormat { Csv, Json };

[[nodiscard]] std::optional<ReportFormat> parse_report_format(std::string_view s) noexcept;

/// CSV columns: dataset, preprocessor, perturbation, metric, aggregate,
/// wall_time_ms, seed. JSON is an array of objects that also carries
/// per_fold and sample_collisions. Rows are ordered by (dataset,
/// preprocessor, perturbation, metric) regardless of input order.
[[nodiscard]] std::string render_report(std::span<const EvaluationReport> reports, ReportFormat format);

void write_report(std::span<const EvaluationReport> reports, const std::filesystem::path& path,
                  ReportFormat format);

}  // namespace scalefree
