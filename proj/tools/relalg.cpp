// relalg: command-line front end for the relation-algebra toolkit.
//
// Exit codes: 0 ok/valid, 1 invalid representation, 2 usage or parse
// error, 3 environment failure (solver launch, I/O).

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "relalg/algebra.hpp"
#include "relalg/algebra_io.hpp"
#include "relalg/batch.hpp"
#include "relalg/bound.hpp"
#include "relalg/comer.hpp"
#include "relalg/encode.hpp"
#include "relalg/fixtures.hpp"
#include "relalg/rep_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEnvironment = 3;

std::atomic<bool> g_cancel{false};

extern "C" void on_interrupt(int) { g_cancel.store(true); }

class EnvironmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

relalg::AlgebraSpec resolve_algebra(const std::string& name) {
  try {
    return relalg::catalog_get(name);
  } catch (const relalg::UnknownAlgebra&) {
    if (std::filesystem::is_regular_file(name)) return relalg::parse_algebra(relalg::read_text_file(name));
    throw;
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw EnvironmentError("cannot write " + path);
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << s << "s";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite integral relation algebras: Comer finite-field algebras, representation checks and SAT encodings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "relalg 0.3.0");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "List catalog algebras or print one");
  std::string catalog_name;
  std::string catalog_file;
  std::string catalog_format = "text";
  bool catalog_validate = false;
  catalog->add_option("name", catalog_name, "Catalog name, e.g. 1311_1316 or E(3)");
  catalog->add_option("--file", catalog_file, "Read an algebra in text or JSON form instead");
  catalog->add_option("--format", catalog_format, "Output format")->check(CLI::IsMember({"text", "json"}));
  catalog->add_flag("--validate", catalog_validate, "Check converse involution, index ranges and Peircean closure");

  // comer
  auto* comer = app.add_subcommand("comer", "Analyse a Comer coset algebra or scan primes");
  std::uint64_t comer_p = 0;
  int comer_m = 0;
  std::uint64_t comer_g = 0;
  bool comer_scan = false;
  int comer_colors = 0;
  std::string comer_mode = "color";
  std::uint64_t comer_max_p = 0;
  unsigned workers = 1;
  comer->add_option("--p", comer_p, "Prime modulus");
  comer->add_option("--m", comer_m, "Number of cosets");
  comer->add_option("--g", comer_g, "Primitive root (default: smallest)");
  comer->add_flag("--scan", comer_scan, "Scan primes for witnesses");
  comer->add_option("--colors", comer_colors, "Number of colors for --scan");
  comer->add_option("--mode", comer_mode, "Scan pattern")->check(CLI::IsMember({"color", "split-sym", "split-asym"}));
  comer->add_option("--max-p", comer_max_p, "Largest prime to scan (default colors^4+5 in color mode)");
  comer->add_option("--workers", workers, "Worker threads");

  // cycles
  auto* cycles = app.add_subcommand("cycles", "Export the mandatory-cycle table X_0 + X_d >= X_e as CSV");
  std::uint64_t cycles_p = 0;
  int cycles_m = 0;
  bool cycles_oracle = false;
  std::string cycles_out;
  cycles->add_option("--p", cycles_p, "Prime modulus")->required();
  cycles->add_option("--m", cycles_m, "Number of cosets")->required();
  cycles->add_flag("--oracle", cycles_oracle, "Use the brute-force sumset computation");
  cycles->add_option("--out", cycles_out, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify a representation file against an algebra");
  std::string verify_algebra;
  std::string verify_file;
  verify->add_option("--algebra", verify_algebra, "Catalog name or algebra file")->required();
  verify->add_option("file", verify_file, "Representation JSON")->required();

  // encode
  auto* encode_cmd = app.add_subcommand("encode", "Emit the DIMACS encoding for one instance");
  std::string algebra_name;
  std::string mode_name = "group";
  int encode_n = 0;
  std::string encode_out;
  bool encode_hash = false;
  bool symmetry_break = false;
  std::string symmetry_atom;
  bool degree_bounds = false;
  bool nonempty_atoms = false;
  const auto add_encode_flags = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", algebra_name, "Catalog name or algebra file")->required();
    cmd->add_option("--mode", mode_name, "Encoding")->check(CLI::IsMember({"group", "points"}));
    cmd->add_flag("--symmetry-break", symmetry_break, "Fix the label of edge (0,1) (points mode)");
    cmd->add_option("--symmetry-atom", symmetry_atom, "Atom used by --symmetry-break (default: first atom)");
    cmd->add_flag("--degree-bounds", degree_bounds, "Add derived per-atom degree caps (points mode)");
    cmd->add_flag("--nonempty-atoms", nonempty_atoms, "Require every atom to be used");
  };
  add_encode_flags(encode_cmd);
  encode_cmd->add_option("--n", encode_n, "Modulus or point count")->required();
  encode_cmd->add_option("--out", encode_out, "Output file (default stdout)");
  encode_cmd->add_flag("--hash", encode_hash, "Print only the FNV-1a hash of the DIMACS text");

  // solve
  auto* solve = app.add_subcommand("solve", "Encode and solve a range of instances with an external solver");
  add_encode_flags(solve);
  int n_from = 0;
  int n_to = 0;
  std::string solver_cmd;
  double timeout = 0.0;
  std::string results_path;
  std::string model_dir;
  std::string report_path;
  std::string proof_args;
  solve->add_option("--n-from", n_from, "First n")->required();
  solve->add_option("--n-to", n_to, "Last n")->required();
  solve->add_option("--solver-cmd", solver_cmd, "Solver command (default $RA_SOLVER_CMD)");
  solve->add_option("--timeout", timeout, "Per-instance timeout in seconds");
  solve->add_option("--workers", workers, "Concurrent solver processes");
  solve->add_option("--results", results_path, "Append-only JSON-lines log; completed n are skipped");
  solve->add_option("--model-dir", model_dir, "Directory for decoded SAT models");
  solve->add_option("--report", report_path, "Write the batch report JSON here");
  solve->add_option("--solver-args", proof_args, "Extra solver arguments, e.g. a proof output flag");

  // bound
  auto* bound = app.add_subcommand("bound", "Derive a point-count bound from degree arguments");
  std::string bound_algebra;
  bound->add_option("--algebra", bound_algebra, "Catalog name or algebra file")->required();

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "Regenerate and re-verify the shipped representation fixtures");
  std::string fixtures_dir = "fixtures";
  bool fixtures_write = false;
  fixtures->add_option("--dir", fixtures_dir, "Fixture directory");
  fixtures->add_flag("--write", fixtures_write, "Rewrite the files from the built-in definitions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*catalog) {
      if (catalog_name.empty() && catalog_file.empty()) {
        for (const auto& name : relalg::catalog_names()) {
          if (name == "E(k)") {
            std::cout << "E(k)        k symmetric colors, only 1-cycles forbidden\n";
            continue;
          }
          const auto spec = relalg::catalog_get(name);
          std::cout << name << std::string(12 - std::min<std::size_t>(11, name.size()), ' ') << relalg::to_text(spec)
                    << '\n';
        }
        return kExitOk;
      }
      const auto spec = catalog_file.empty() ? relalg::catalog_get(catalog_name)
                                             : relalg::parse_algebra(relalg::read_text_file(catalog_file));
      if (catalog_format == "json") {
        std::cout << relalg::dump_compact(relalg::to_json(spec));
      } else {
        std::cout << relalg::to_text(spec) << '\n';
      }
      if (catalog_validate) {
        const auto report = relalg::validate_spec(spec);
        std::cerr << (report.valid ? "valid" : "invalid") << '\n';
        for (const auto& v : report.violations) std::cerr << "  " << v << '\n';
        return report.valid ? kExitOk : kExitInvalid;
      }
      return kExitOk;
    }

    if (*comer) {
      if (comer_scan) {
        if (comer_colors < 1) throw std::invalid_argument("--scan needs --colors >= 1");
        relalg::ScanOptions opts;
        opts.colors = comer_colors;
        opts.mode = relalg::scan_mode_from_string(comer_mode);
        if (comer_max_p > 0) opts.max_p = comer_max_p;
        opts.workers = workers;
        const auto hits = relalg::scan(opts);
        nlohmann::json j;
        j["colors"] = comer_colors;
        j["mode"] = comer_mode;
        j["m"] = relalg::scan_modulus(opts);
        const auto k = static_cast<std::uint64_t>(comer_colors);
        j["max_p"] = opts.max_p ? *opts.max_p : k * k * k * k + 5;
        j["witnesses"] = hits;
        std::cout << relalg::dump_compact(j);
        return kExitOk;
      }
      if (comer_p == 0 || comer_m == 0) throw std::invalid_argument("comer needs --p and --m, or --scan");
      const relalg::CosetPartition part(comer_p, comer_m, comer_g);
      std::cout << relalg::dump_compact(relalg::to_json(relalg::classify(part)));
      return kExitOk;
    }

    if (*cycles) {
      const relalg::CosetPartition part(cycles_p, cycles_m);
      const auto table = cycles_oracle ? relalg::cycle_table_oracle(part) : relalg::cycle_table(part);
      write_output(cycles_out, table.to_csv());
      return kExitOk;
    }

    if (*verify) {
      const auto spec = resolve_algebra(verify_algebra);
      const auto rep = relalg::representation_from_json(relalg::read_json_file(verify_file), spec);
      const auto report = relalg::verify(spec, rep);
      std::cout << relalg::dump_compact(relalg::to_json(report, spec));
      return report.valid ? kExitOk : kExitInvalid;
    }

    const auto encode_options = [&](const relalg::AlgebraSpec& spec) {
      relalg::EncodeOptions opts;
      if (symmetry_break) opts.symmetry_break_atom = symmetry_atom.empty() ? 0 : spec.atom_index(symmetry_atom);
      opts.degree_bounds = degree_bounds;
      opts.nonempty_atoms = nonempty_atoms;
      return opts;
    };

    if (*encode_cmd) {
      const auto spec = resolve_algebra(algebra_name);
      const auto cnf = relalg::encode(spec, relalg::encoding_mode_from_string(mode_name), encode_n, encode_options(spec));
      const auto text = relalg::emit_dimacs(cnf);
      if (encode_hash) {
        std::ostringstream os;
        os << std::hex << relalg::fnv1a64(text) << '\n';
        write_output(encode_out, os.str());
      } else {
        write_output(encode_out, text);
      }
      return kExitOk;
    }

    if (*solve) {
      const auto spec = resolve_algebra(algebra_name);
      if (solver_cmd.empty()) {
        if (const char* env = std::getenv("RA_SOLVER_CMD")) solver_cmd = env;
      }
      if (solver_cmd.empty()) throw std::invalid_argument("no solver: pass --solver-cmd or set RA_SOLVER_CMD");

      relalg::BatchOptions opts;
      opts.mode = relalg::encoding_mode_from_string(mode_name);
      opts.n_from = n_from;
      opts.n_to = n_to;
      opts.encode = encode_options(spec);
      opts.solver.command = solver_cmd;
      opts.solver.timeout_seconds = timeout;
      opts.solver.extra_args = proof_args;
      opts.solver.cancel = &g_cancel;
      opts.workers = workers;
      opts.results_path = results_path;
      opts.model_dir = model_dir;
      std::signal(SIGINT, on_interrupt);
      std::signal(SIGTERM, on_interrupt);

      std::vector<relalg::BatchEntry> entries;
      try {
        entries = relalg::solve_batch(spec, opts, [](const relalg::BatchEntry& e) {
          std::cout << "n=" << e.n << ' ' << relalg::to_string(e.status) << ' ' << format_seconds(e.seconds);
          if (e.verified) std::cout << (*e.verified ? " verified" : " VERIFY-FAILED");
          if (!e.note.empty()) std::cout << " (" << e.note << ')';
          std::cout << std::endl;
        });
      } catch (const relalg::SolverLaunchError& e) {
        throw EnvironmentError(e.what());
      }

      nlohmann::json report = nlohmann::json::array();
      std::vector<int> sat;
      std::vector<int> unsat;
      std::vector<int> unknown;
      for (const auto& e : entries) {
        if (e.resumed) std::cout << "n=" << e.n << ' ' << relalg::to_string(e.status) << " (resumed)\n";
        report.push_back(relalg::to_json(e));
        (e.status == relalg::SolveStatus::Sat ? sat : e.status == relalg::SolveStatus::Unsat ? unsat : unknown)
            .push_back(e.n);
      }
      const auto list = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
      };
      std::cout << "summary " << spec.name() << ' ' << mode_name << ": sat " << list(sat) << " unsat " << list(unsat)
                << " unknown " << list(unknown) << '\n';
      if (!report_path.empty()) write_output(report_path, relalg::dump_compact(report));
      return kExitOk;
    }

    if (*bound) {
      const auto spec = resolve_algebra(bound_algebra);
      const auto d = relalg::point_bound(spec);
      if (!d) {
        std::cout << "no bound derived for " << spec.name() << '\n';
        return kExitOk;
      }
      nlohmann::json j;
      j["algebra"] = d->algebra;
      j["bound"] = d->bound;
      j["coarse_bound"] = d->coarse_bound;
      nlohmann::json caps;
      for (int k = 0; k < spec.atom_count(); ++k) caps[spec.atom_name(k)] = d->degree_caps[static_cast<std::size_t>(k)];
      j["degree_caps"] = caps;
      j["trace"] = d->trace;
      std::cout << relalg::dump_compact(j);
      return kExitOk;
    }

    if (*fixtures) {
      bool all_ok = true;
      if (fixtures_write) std::filesystem::create_directories(fixtures_dir);
      for (const auto& f : relalg::shipped_fixtures()) {
        const auto path = (std::filesystem::path(fixtures_dir) / f.file).string();
        const auto expected_text = relalg::dump_compact(f.content);
        if (fixtures_write) write_output(path, expected_text);
        std::string status;
        bool ok = true;
        if (!std::filesystem::exists(path)) {
          status = "missing";
          ok = false;
        } else {
          const bool same = relalg::read_text_file(path) == expected_text;
          const auto spec = relalg::catalog_get(f.algebra);
          const auto report = relalg::verify(spec, relalg::representation_from_json(relalg::read_json_file(path), spec));
          ok = same && report.valid == f.expect_valid;
          status = std::string(report.valid ? "valid" : "invalid") + (same ? "" : ", differs from built-in");
        }
        all_ok = all_ok && ok;
        std::cout << (ok ? "ok   " : "FAIL ") << f.file << "  " << f.algebra << "  " << status << '\n';
      }
      return all_ok ? kExitOk : kExitInvalid;
    }
  } catch (const EnvironmentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEnvironment;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEnvironment;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
