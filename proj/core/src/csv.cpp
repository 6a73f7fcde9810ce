#include "scalefree/csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "scalefree/error.hpp"

namespace scalefree {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// RFC 4180 style: fields may be double-quoted, "" escapes a quote.
// Multi-line quoted fields are not supported.
std::vector<std::string> split_record(std::string_view line, std::size_t line_no) {
  if (line.ends_with('\r')) line.remove_suffix(1);
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(ch);
      }
    } else if (ch == ',') {
      fields.push_back(was_quoted ? cur : std::string(trim(cur)));
      cur.clear();
      was_quoted = false;
    } else if (was_quoted) {
      if (ch != ' ' && ch != '\t') {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": text after closing quote");
      }
    } else if (ch == '"' && trim(cur).empty()) {
      cur.clear();
      quoted = true;
      was_quoted = true;
    } else {
      cur.push_back(ch);
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unterminated quote");
  fields.push_back(was_quoted ? cur : std::string(trim(cur)));
  return fields;
}

std::optional<std::size_t> resolve_label(const std::vector<std::string>& header, const std::string& sel) {
  const auto it = std::find(header.begin(), header.end(), sel);
  if (it != header.end()) return static_cast<std::size_t>(it - header.begin());
  std::size_t idx = 0;
  const auto [ptr, ec] = std::from_chars(sel.data(), sel.data() + sel.size(), idx);
  if (ec == std::errc{} && ptr == sel.data() + sel.size() && idx < header.size()) return idx;
  return std::nullopt;
}

bool quote_needed(std::string_view s) {
  return s.find_first_of(",\"\r\n") != std::string_view::npos ||
         (!s.empty() && (s.front() == ' ' || s.back() == ' '));
}

void write_field(std::ostream& out, std::string_view s) {
  if (!quote_needed(s)) {
    out << s;
    return;
  }
  out << '"';
  for (const char ch : s) {
    if (ch == '"') out << '"';
    out << ch;
  }
  out << '"';
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), ptr};
}

Dataset parse_csv(std::istream& in, std::string name, const std::optional<std::string>& label_column) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!trim(line).empty()) {
      header = split_record(line, line_no);
      break;
    }
  }
  if (header.empty()) throw Error(ErrorCode::EmptyFile, "'" + name + "' has no header row");

  std::optional<std::size_t> label_idx;
  if (label_column) {
    label_idx = resolve_label(header, *label_column);
    if (!label_idx) {
      throw Error(ErrorCode::MissingLabelColumn, "no column named or indexed '" + *label_column + "'");
    }
  }

  Dataset data;
  data.name = std::move(name);
  const std::size_t width = header.size();
  const std::size_t features = width - (label_idx ? 1 : 0);
  data.columns.resize(features);
  for (std::size_t c = 0; c < width; ++c) {
    if (label_idx && c == *label_idx) continue;
    data.feature_names.push_back(header[c]);
  }
  if (label_idx) {
    data.label_name = header[*label_idx];
    data.label_position = *label_idx;
  }

  std::vector<std::string> raw_labels;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_record(line, line_no);
    if (fields.size() != width) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + " (row " + std::to_string(row) +
                                             "): expected " + std::to_string(width) + " fields, found " +
                                             std::to_string(fields.size()));
    }
    std::size_t feature = 0;
    for (std::size_t c = 0; c < width; ++c) {
      const std::string& cell = fields[c];
      if (label_idx && c == *label_idx) {
        raw_labels.push_back(cell);
        continue;
      }
      const auto where = [&] {
        return "line " + std::to_string(line_no) + " (row " + std::to_string(row) + "), column '" + header[c] +
               "' (index " + std::to_string(c) + ")";
      };
      if (cell.empty()) throw Error(ErrorCode::ParseError, where() + ": missing value");
      double v = 0.0;
      const char* first = cell.data();
      if (*first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, cell.data() + cell.size(), v);
      if (ec == std::errc::result_out_of_range) {
        throw Error(ErrorCode::NonFiniteValue, where() + ": value '" + cell + "' is out of range");
      }
      if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw Error(ErrorCode::ParseError, where() + ": cannot parse '" + cell + "' as a number");
      }
      if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, where() + ": value '" + cell + "'");
      data.columns[feature++].push_back(v);
    }
    ++row;
  }
  if (row == 0) throw Error(ErrorCode::EmptyFile, "'" + data.name + "' has a header but no data rows");
  if (label_idx) data.labels = Labels::from_strings(raw_labels);
  return data;
}

Dataset load_csv(const std::filesystem::path& path, const std::optional<std::string>& label_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  return parse_csv(in, path.stem().string(), label_column);
}

void write_csv(const Dataset& data, std::ostream& out) {
  const bool has_labels = data.labels.has_value();
  const std::size_t width = data.cols() + (has_labels ? 1 : 0);
  const std::size_t label_at = has_labels ? std::min(data.label_position, data.cols()) : width;

  const auto emit_row = [&](auto&& feature_cell, auto&& label_cell) {
    std::size_t feature = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (c > 0) out << ',';
      if (c == label_at) {
        label_cell();
      } else {
        feature_cell(feature++);
      }
    }
    out << '\n';
  };

  emit_row(
      [&](std::size_t f) {
        write_field(out, f < data.feature_names.size() ? data.feature_names[f] : "x" + std::to_string(f));
      },
      [&] { write_field(out, data.label_name.empty() ? std::string("label") : data.label_name); });
  for (std::size_t r = 0; r < data.rows(); ++r) {
    emit_row([&](std::size_t f) { out << format_double(data.columns[f][r]); },
             [&] { write_field(out, data.labels->name_of(r)); });
  }
}

void write_csv(const Dataset& data, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  write_csv(data, out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

}  // namespace scalefree
