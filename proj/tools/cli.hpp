#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scalefree/perturbation.hpp"
#include "scalefree/transformer.hpp"

namespace scalefree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Seed used when neither --seed nor SCALEFREE_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 0;

enum class Task { Classify, Anomaly };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string output;
  std::string model;
  std::string detail;
  TransformKind kind = TransformKind::Ares;
  std::size_t psi = kDefaultPsi;
  std::size_t t = kDefaultT;
  std::uint64_t seed = kDefaultSeed;
  PerturbationSpec perturbation;
  std::optional<std::string> label_col;
  Task task = Task::Classify;
  std::size_t k = 5;
  std::size_t folds = 10;
  bool grid = false;
  bool timing = false;
  std::string format;
};

int cmd_fit(const RunConfig& config, std::ostream& out);
int cmd_transform(const RunConfig& config, std::ostream& out);
int cmd_perturb(const RunConfig& config, std::ostream& out);
int cmd_evaluate(const RunConfig& config, std::ostream& out);

/// Parses `args` (without the program name) and dispatches. Usage errors
/// return 2, data and contract errors return 1.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scalefree::cli
