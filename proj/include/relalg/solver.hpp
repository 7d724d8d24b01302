#pragma once

#include <atomic>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/cnf.hpp"

namespace relalg {

enum class SolveStatus { Sat, Unsat, Unknown };
std::string to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::vector<int> model;  ///< true variables, ascending; empty unless Sat
  double seconds = 0.0;
  std::string solver;      ///< first "c" banner line naming the solver, if any
  std::string diagnostic;
};

class SolverLaunchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverOptions {
  /// Shell command; the DIMACS path is appended as the last argument.
  std::string command;
  /// Wall-clock limit in seconds; <= 0 means none.
  double timeout_seconds = 0.0;
  /// Extra arguments placed before the DIMACS path (e.g. a proof output flag).
  std::string extra_args;
  /// Directory for the temporary DIMACS and output files; system temp if empty.
  std::string work_dir;
  /// Set from another thread to abandon the run; the solver is killed.
  const std::atomic<bool>* cancel = nullptr;
};

/// Maps a SAT-competition exit code and stdout to a result: 10 with "v"
/// lines is Sat, 20 is Unsat, anything else (or an unreadable model) is
/// Unknown with a diagnostic.
SolveResult parse_solver_output(int exit_code, std::string_view output);

/// Writes `cnf` as DIMACS and runs the solver on it. Throws
/// SolverLaunchError when the command cannot be started.
SolveResult run_solver(const CnfFormula& cnf, const SolverOptions& opts);
SolveResult run_solver_on_file(const std::string& dimacs_path, const SolverOptions& opts);

}  // namespace relalg
