#include "scalefree/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "scalefree/error.hpp"
#include "scalefree/random.hpp"

namespace scalefree {

using json = nlohmann::ordered_json;

namespace {

json column_to_json(const ColumnModel& model) {
  if (const auto* p = std::get_if<MinMaxParams>(&model)) return {{"min", p->min}, {"max", p->max}};
  if (const auto* r = std::get_if<RankModel>(&model)) return {{"sorted_train", r->sorted_train}};
  const auto& a = std::get<AresModel>(model);
  json subs = json::array();
  for (std::size_t j = 0; j < a.t(); ++j) {
    const auto s = a.subsample(j);
    subs.push_back(std::vector<double>(s.begin(), s.end()));
  }
  return {{"subsamples", std::move(subs)}};
}

[[noreturn]] void corrupt(const std::string& why) { throw Error(ErrorCode::CorruptModel, why); }

template <class T>
T get_field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) corrupt(std::string("missing key '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    corrupt(std::string("key '") + key + "': " + e.what());
  }
}

std::vector<double> sorted_array(const json& obj, const char* key) {
  auto v = get_field<std::vector<double>>(obj, key);
  if (!std::is_sorted(v.begin(), v.end())) corrupt(std::string("'") + key + "' is not sorted");
  return v;
}

ColumnModel column_from_json(TransformKind kind, const TransformParams& params, const json& c) {
  switch (kind) {
    case TransformKind::MinMax: {
      MinMaxParams p{get_field<double>(c, "min"), get_field<double>(c, "max")};
      if (!(p.min <= p.max)) corrupt("min exceeds max");
      return p;
    }
    case TransformKind::Rank: {
      auto sorted = sorted_array(c, "sorted_train");
      if (sorted.empty()) corrupt("empty sorted_train");
      return RankModel{std::move(sorted)};
    }
    case TransformKind::Ares: {
      if (!c.is_object() || !c.contains("subsamples") || !c.at("subsamples").is_array()) {
        corrupt("missing 'subsamples' array");
      }
      const auto& subs = c.at("subsamples");
      if (subs.size() != params.t) corrupt("expected " + std::to_string(params.t) + " sub-samples");
      std::vector<double> flat;
      flat.reserve(params.psi * params.t);
      for (const auto& s : subs) {
        std::vector<double> v;
        try {
          v = s.get<std::vector<double>>();
        } catch (const json::exception& e) {
          corrupt(std::string("sub-sample: ") + e.what());
        }
        if (v.size() != params.psi) corrupt("sub-sample length differs from psi");
        if (!std::is_sorted(v.begin(), v.end())) corrupt("sub-sample is not sorted");
        flat.insert(flat.end(), v.begin(), v.end());
      }
      return AresModel(params.psi, params.t, params.seed, std::move(flat));
    }
  }
  corrupt("unknown kind");
}

}  // namespace

std::string model_fingerprint(std::size_t column_count) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(mix64(column_count)));
  return buf;
}

std::string serialize_model(const FittedTransformer& ft) {
  json doc;
  doc["format_version"] = kModelFormatVersion;
  doc["kind"] = std::string(to_string(ft.kind()));
  if (ft.kind() == TransformKind::Ares) {
    doc["psi"] = ft.params().psi;
    doc["t"] = ft.params().t;
    doc["seed"] = ft.params().seed;
  }
  doc["fingerprint"] = model_fingerprint(ft.column_count());
  json cols = json::array();
  for (const auto& c : ft.columns()) cols.push_back(column_to_json(c));
  doc["columns"] = std::move(cols);
  return doc.dump(1) + "\n";
}

FittedTransformer deserialize_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    corrupt(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) corrupt("top level is not an object");

  const auto version = get_field<int>(doc, "format_version");
  if (version > kModelFormatVersion || version < 1) {
    throw Error(ErrorCode::UnsupportedVersion,
                "format_version " + std::to_string(version) + " (supported: " +
                    std::to_string(kModelFormatVersion) + ")");
  }
  const auto kind = parse_transform_kind(get_field<std::string>(doc, "kind"));
  if (!kind) corrupt("unknown kind");

  TransformParams params;
  if (*kind == TransformKind::Ares) {
    params.psi = get_field<std::size_t>(doc, "psi");
    params.t = get_field<std::size_t>(doc, "t");
    params.seed = get_field<std::uint64_t>(doc, "seed");
    if (params.psi < 1 || params.t < 1) corrupt("psi and t must be positive");
  }

  if (!doc.contains("columns") || !doc.at("columns").is_array()) corrupt("missing 'columns' array");
  const auto& cols = doc.at("columns");
  if (get_field<std::string>(doc, "fingerprint") != model_fingerprint(cols.size())) {
    corrupt("fingerprint does not match column count");
  }
  std::vector<ColumnModel> models;
  models.reserve(cols.size());
  for (const auto& c : cols) models.push_back(column_from_json(*kind, params, c));
  return FittedTransformer(*kind, params, std::move(models));
}

void save_model(const FittedTransformer& ft, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out << serialize_model(ft);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

FittedTransformer load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize_model(buf.str());
}

}  // namespace scalefree
