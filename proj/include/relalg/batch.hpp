#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "relalg/algebra.hpp"
#include "relalg/encode.hpp"
#include "relalg/solver.hpp"

namespace relalg {

struct BatchOptions {
  EncodingMode mode = EncodingMode::Group;
  int n_from = 2;
  int n_to = 2;
  EncodeOptions encode;
  SolverOptions solver;
  unsigned workers = 1;
  /// Append-only JSON-lines log. Instances already recorded there as sat or
  /// unsat for the same algebra and mode are not rerun.
  std::string results_path;
  /// When set, decoded SAT models are written here as representation JSON.
  std::string model_dir;
};

struct BatchEntry {
  std::string algebra;
  EncodingMode mode = EncodingMode::Group;
  int n = 0;
  SolveStatus status = SolveStatus::Unknown;
  double seconds = 0.0;
  std::optional<std::string> model_file;
  /// For SAT results: whether the decoded model passed the checker.
  std::optional<bool> verified;
  std::string note;
  bool resumed = false;
};

nlohmann::json to_json(const BatchEntry& e);
BatchEntry batch_entry_from_json(const nlohmann::json& j);

/// Solves every n in [n_from, n_to] with one solver process per instance,
/// at most `workers` at a time. Results come back ordered by n. SAT models
/// are decoded and re-verified. `on_result` is called (serialized) as each
/// instance finishes.
std::vector<BatchEntry> solve_batch(const AlgebraSpec& spec, const BatchOptions& opts,
                                    const std::function<void(const BatchEntry&)>& on_result = {});

}  // namespace relalg
