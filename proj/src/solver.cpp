#include "relalg/solver.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace relalg {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat: return "sat";
    case SolveStatus::Unsat: return "unsat";
    case SolveStatus::Unknown: return "unknown";
  }
  return "unknown";
}

SolveResult parse_solver_output(int exit_code, std::string_view output) {
  SolveResult r;
  std::istringstream in{std::string(output)};
  std::string line;
  std::vector<int> model;
  bool saw_v = false;
  bool terminated = false;
  std::string bad;
  while (std::getline(in, line)) {
    if (line.starts_with("c ") && r.solver.empty()) {
      r.solver = line.substr(2);
    } else if (line.starts_with("v")) {
      saw_v = true;
      std::istringstream vs(line.substr(1));
      std::string tok;
      while (vs >> tok) {
        int lit = 0;
        try {
          std::size_t used = 0;
          lit = std::stoi(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          if (bad.empty()) bad = tok;
          continue;
        }
        if (lit == 0) {
          terminated = true;
        } else if (lit > 0) {
          model.push_back(lit);
        }
      }
    }
  }

  if (exit_code == 20) {
    r.status = SolveStatus::Unsat;
  } else if (exit_code == 10) {
    if (!bad.empty()) {
      r.diagnostic = "malformed model token '" + bad + "'";
    } else if (!saw_v) {
      r.diagnostic = "solver reported SAT without a model";
    } else if (!terminated) {
      r.diagnostic = "model not zero-terminated";
    } else {
      std::sort(model.begin(), model.end());
      r.status = SolveStatus::Sat;
      r.model = std::move(model);
    }
  } else {
    r.diagnostic = "solver exited with code " + std::to_string(exit_code);
  }
  return r;
}

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::filesystem::path make_temp_dir(const std::string& base) {
  const auto root = base.empty() ? std::filesystem::temp_directory_path() : std::filesystem::path(base);
  std::filesystem::create_directories(root);
  auto tmpl = (root / "relalg-XXXXXX").string();
  if (::mkdtemp(tmpl.data()) == nullptr) throw SolverLaunchError("cannot create temporary directory in " + root.string());
  return tmpl;
}

struct TempDir {
  std::filesystem::path path;
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

}  // namespace

SolveResult run_solver_on_file(const std::string& dimacs_path, const SolverOptions& opts) {
  if (opts.command.empty()) throw SolverLaunchError("no solver command configured");
  TempDir tmp{make_temp_dir(opts.work_dir)};
  const auto out_path = (tmp.path / "stdout").string();
  const auto err_path = (tmp.path / "stderr").string();
  std::string cmd = opts.command;
  if (!opts.extra_args.empty()) cmd += " " + opts.extra_args;
  cmd += " " + shell_quote(dimacs_path);

  const auto start = std::chrono::steady_clock::now();
  const pid_t pid = ::fork();
  if (pid < 0) throw SolverLaunchError("fork failed");
  if (pid == 0) {
    ::setpgid(0, 0);
    const int out_fd = ::open(out_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
    const int err_fd = ::open(err_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
    if (out_fd < 0 || err_fd < 0) ::_exit(126);
    ::dup2(out_fd, STDOUT_FILENO);
    ::dup2(err_fd, STDERR_FILENO);
    ::execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);

  int status = 0;
  bool killed = false;
  std::string kill_reason;
  auto delay = std::chrono::milliseconds(1);
  for (;;) {
    const pid_t done = ::waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool cancelled = opts.cancel != nullptr && opts.cancel->load();
    if (!killed && (cancelled || (opts.timeout_seconds > 0 && elapsed > opts.timeout_seconds))) {
      ::kill(-pid, SIGKILL);
      killed = true;
      kill_reason = cancelled ? "cancelled" : "timeout after " + std::to_string(opts.timeout_seconds) + " s";
    }
    std::this_thread::sleep_for(delay);
    delay = std::min(delay * 2, std::chrono::milliseconds(50));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::ifstream out_file(out_path);
  std::stringstream out_text;
  out_text << out_file.rdbuf();

  if (killed) {
    SolveResult r;
    r.seconds = seconds;
    r.diagnostic = kill_reason;
    return r;
  }
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code == 126 || code == 127) {
    std::ifstream err_file(err_path);
    std::stringstream err_text;
    err_text << err_file.rdbuf();
    throw SolverLaunchError("cannot launch solver '" + opts.command + "': " + err_text.str());
  }
  auto r = parse_solver_output(code, out_text.str());
  r.seconds = seconds;
  return r;
}

SolveResult run_solver(const CnfFormula& cnf, const SolverOptions& opts) {
  TempDir tmp{make_temp_dir(opts.work_dir)};
  const auto path = (tmp.path / "formula.cnf").string();
  {
    std::ofstream out(path, std::ios::binary);
    out << emit_dimacs(cnf);
    if (!out) throw SolverLaunchError("cannot write " + path);
  }
  return run_solver_on_file(path, opts);
}

}  // namespace relalg
