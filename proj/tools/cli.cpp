#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>

#include "CLI11.hpp"
#include "scalefree/csv.hpp"
#include "scalefree/error.hpp"
#include "scalefree/evaluation.hpp"
#include "scalefree/model_io.hpp"
#include "scalefree/report.hpp"

namespace scalefree::cli {

namespace {

// Enum-valued flags are parsed as strings and resolved after parsing.
struct NamedFlags {
  std::string kind = "ares";
  std::string perturb = "identity";
  std::string task = "classify";
};

const std::vector<std::string> kKindNames{"minmax", "rank", "ares"};
const std::vector<std::string> kPerturbNames{"identity", "log", "square", "sqrt", "inverse"};
const std::vector<std::string> kTaskNames{"classify", "anomaly"};

// Zero-based index of the last header field, used as the default label
// column for `evaluate`.
std::string last_column_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::size_t fields = 1;
    bool quoted = false;
    for (const char ch : line) {
      if (ch == '"') quoted = !quoted;
      if (ch == ',' && !quoted) ++fields;
    }
    return std::to_string(fields - 1);
  }
  throw Error(ErrorCode::EmptyFile, "'" + path + "' has no header row");
}

ReportFormat report_format(const RunConfig& config) {
  if (!config.format.empty()) return *parse_report_format(config.format);
  return std::filesystem::path(config.output).extension() == ".json" ? ReportFormat::Json : ReportFormat::Csv;
}

void add_label_option(CLI::App* sub, RunConfig& config) {
  sub->add_option("--label-col", config.label_col, "Label column, by header name or zero-based index");
}

void add_transform_options(CLI::App* sub, RunConfig& config) {
  sub->add_option("--psi", config.psi, "ARES sub-sample size")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--t", config.t, "ARES ensemble size")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--seed", config.seed, "Global seed")->envname("SCALEFREE_SEED")->capture_default_str();
}

void add_perturb_options(CLI::App* sub, RunConfig& config, NamedFlags& named) {
  sub->add_option("--perturb", named.perturb, "Monotone rescaling")
      ->check(CLI::IsMember(kPerturbNames))
      ->capture_default_str();
  sub->add_option("--perturb-a", config.perturbation.a, "Shift a in x' = b(x + a)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--perturb-b", config.perturbation.b, "Scale b in x' = b(x + a)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int cmd_fit(const RunConfig& config, std::ostream& out) {
  const Dataset data = load_csv(config.inputs.at(0), config.label_col);
  const FittedTransformer ft = fit_matrix(data, config.kind, {config.psi, config.t, config.seed});
  save_model(ft, config.output);
  out << "fitted " << to_string(ft.kind()) << " on " << data.rows() << " rows x " << data.cols()
      << " columns -> " << config.output << '\n';
  return kExitOk;
}

int cmd_transform(const RunConfig& config, std::ostream& out) {
  const FittedTransformer ft = load_model(config.model);
  const Dataset data = load_csv(config.inputs.at(0), config.label_col);
  write_csv(transform_matrix(ft, data), config.output);
  out << "transformed " << data.rows() << " rows with " << to_string(ft.kind()) << " -> " << config.output << '\n';
  return kExitOk;
}

int cmd_perturb(const RunConfig& config, std::ostream& out) {
  const Dataset data = load_csv(config.inputs.at(0), config.label_col);
  write_csv(perturb_dataset(data, config.perturbation), config.output);
  out << "applied " << to_string(config.perturbation.kind) << " to " << data.cols() << " columns -> "
      << config.output << '\n';
  return kExitOk;
}

int cmd_evaluate(const RunConfig& config, std::ostream& out) {
  std::vector<TransformKind> kinds{config.kind};
  std::vector<PerturbationKind> perturbations{config.perturbation.kind};
  if (config.grid) {
    kinds = {TransformKind::MinMax, TransformKind::Rank, TransformKind::Ares};
    perturbations.assign(std::begin(kAllPerturbations), std::end(kAllPerturbations));
  }

  EvalConfig eval;
  eval.psi = config.psi;
  eval.t = config.t;
  eval.knn_k = config.k;
  eval.folds = config.folds;
  eval.seed = config.seed;
  eval.record_time = config.timing;

  std::vector<EvaluationReport> reports;
  for (const auto& input : config.inputs) {
    const auto label = config.label_col ? *config.label_col : last_column_index(input);
    const Dataset data = load_csv(input, label);
    for (const auto kind : kinds) {
      for (const auto p : perturbations) {
        PerturbationSpec spec = config.perturbation;
        spec.kind = p;
        reports.push_back(config.task == Task::Classify ? run_classification(data, kind, spec, eval)
                                                        : run_anomaly(data, kind, spec, eval));
        const auto& r = reports.back();
        out << r.dataset_name << ' ' << to_string(r.preprocessor) << ' ' << to_string(r.perturbation) << ' '
            << to_string(r.metric) << '=' << format_double(r.aggregate) << '\n';
      }
    }
  }
  write_report(reports, config.output, report_format(config));
  if (!config.detail.empty()) write_report(reports, config.detail, ReportFormat::Json);
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  NamedFlags named;
  CLI::App app{"Scale-robust preprocessing: min-max, rank and ARES transforms", "scalefree"};
  app.require_subcommand(1);

  auto* fit = app.add_subcommand("fit", "Fit a transformer on a CSV and write a model file");
  fit->add_option("--input", config.inputs, "Training CSV")->required()->expected(1);
  fit->add_option("--output", config.output, "Model file to write")->required();
  fit->add_option("--kind", named.kind, "Transformer")->check(CLI::IsMember(kKindNames))->capture_default_str();
  add_transform_options(fit, config);
  add_label_option(fit, config);

  auto* transform = app.add_subcommand("transform", "Apply a saved model to a CSV");
  transform->add_option("--input", config.inputs, "CSV to transform")->required()->expected(1);
  transform->add_option("--model", config.model, "Model file from `fit`")->required();
  transform->add_option("--output", config.output, "Transformed CSV to write")->required();
  add_label_option(transform, config);

  auto* perturb = app.add_subcommand("perturb", "Apply a monotone rescaling to every feature column");
  perturb->add_option("--input", config.inputs, "CSV to perturb")->required()->expected(1);
  perturb->add_option("--output", config.output, "Perturbed CSV to write")->required();
  add_perturb_options(perturb, config, named);
  add_label_option(perturb, config);

  auto* evaluate = app.add_subcommand("evaluate", "Cross-validated KNN accuracy or LOF AUC");
  evaluate->add_option("--input", config.inputs, "Dataset CSV (repeatable)")->required();
  evaluate->add_option("--output", config.output, "Report file (.csv or .json)")->required();
  evaluate->add_option("--detail", config.detail, "Optional JSON file with per-fold detail");
  evaluate->add_option("--format", config.format, "Report format; default from --output extension")
      ->check(CLI::IsMember({"csv", "json"}));
  evaluate->add_option("--task", named.task, "Evaluation task")->check(CLI::IsMember(kTaskNames))->capture_default_str();
  evaluate->add_option("--kind,--preproc", named.kind, "Preprocessor")
      ->check(CLI::IsMember(kKindNames))
      ->capture_default_str();
  evaluate->add_option("--k", config.k, "KNN neighbours")->check(CLI::PositiveNumber)->capture_default_str();
  evaluate->add_option("--folds", config.folds, "Cross-validation folds")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  evaluate->add_flag("--grid", config.grid, "Sweep every preprocessor x perturbation");
  evaluate->add_flag("--timing", config.timing, "Record wall_time_ms (otherwise 0, keeping output reproducible)");
  add_transform_options(evaluate, config);
  add_perturb_options(evaluate, config, named);
  add_label_option(evaluate, config);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    if (const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) {
      err << sub->help();
    }
    return kExitUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.kind = *parse_transform_kind(named.kind);
  config.perturbation.kind = *parse_perturbation_kind(named.perturb);
  config.task = named.task == "anomaly" ? Task::Anomaly : Task::Classify;
  try {
    if (config.subcommand == "fit") return cmd_fit(config, out);
    if (config.subcommand == "transform") return cmd_transform(config, out);
    if (config.subcommand == "perturb") return cmd_perturb(config, out);
    return cmd_evaluate(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace scalefree::cli
