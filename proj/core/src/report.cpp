#include "scalefree/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "scalefree/csv.hpp"
#include "scalefree/error.hpp"

namespace scalefree {

namespace {

std::vector<const EvaluationReport*> ordered(std::span<const EvaluationReport> reports) {
  std::vector<const EvaluationReport*> rows;
  rows.reserve(reports.size());
  for (const auto& r : reports) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(), [](const EvaluationReport* a, const EvaluationReport* b) {
    return std::tie(a->dataset_name, a->preprocessor, a->perturbation, a->metric) <
           std::tie(b->dataset_name, b->preprocessor, b->perturbation, b->metric);
  });
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view s) noexcept {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  return std::nullopt;
}

std::string render_report(std::span<const EvaluationReport> reports, ReportFormat format) {
  if (reports.empty()) throw Error(ErrorCode::Empty, "no reports to write");
  const auto rows = ordered(reports);

  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "dataset,preprocessor,perturbation,metric,aggregate,wall_time_ms,seed\n";
    for (const auto* r : rows) {
      out << csv_field(r->dataset_name) << ',' << to_string(r->preprocessor) << ',' << to_string(r->perturbation)
          << ',' << to_string(r->metric) << ',' << format_double(r->aggregate) << ','
          << format_double(r->wall_time_ms) << ',' << r->seed << '\n';
    }
    return out.str();
  }

  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto* r : rows) {
    doc.push_back({
        {"dataset", r->dataset_name},
        {"preprocessor", to_string(r->preprocessor)},
        {"perturbation", to_string(r->perturbation)},
        {"metric", to_string(r->metric)},
        {"aggregate", r->aggregate},
        {"per_fold", r->per_fold},
        {"wall_time_ms", r->wall_time_ms},
        {"seed", r->seed},
        {"sample_collisions", r->sample_collisions},
    });
  }
  return doc.dump(2) + "\n";
}

void write_report(std::span<const EvaluationReport> reports, const std::filesystem::path& path,
                  ReportFormat format) {
  const std::string text = render_report(reports, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

}  // namespace scalefree
