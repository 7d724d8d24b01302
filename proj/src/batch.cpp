#include "relalg/batch.hpp"

#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "relalg/rep_io.hpp"

namespace relalg {

nlohmann::json to_json(const BatchEntry& e) {
  nlohmann::json j;
  j["algebra"] = e.algebra;
  j["mode"] = to_string(e.mode);
  j["n"] = e.n;
  j["status"] = to_string(e.status);
  j["seconds"] = std::round(e.seconds * 1000.0) / 1000.0;
  if (e.model_file) j["model_file"] = *e.model_file;
  if (e.verified) j["verified"] = *e.verified;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

BatchEntry batch_entry_from_json(const nlohmann::json& j) {
  BatchEntry e;
  e.algebra = j.at("algebra").get<std::string>();
  e.mode = encoding_mode_from_string(j.at("mode").get<std::string>());
  e.n = j.at("n").get<int>();
  const auto status = j.at("status").get<std::string>();
  e.status = status == "sat" ? SolveStatus::Sat : status == "unsat" ? SolveStatus::Unsat : SolveStatus::Unknown;
  e.seconds = j.value("seconds", 0.0);
  if (j.contains("model_file")) e.model_file = j["model_file"].get<std::string>();
  if (j.contains("verified")) e.verified = j["verified"].get<bool>();
  e.note = j.value("note", std::string{});
  return e;
}

namespace {

std::map<int, BatchEntry> load_completed(const std::string& path, const std::string& algebra, EncodingMode mode) {
  std::map<int, BatchEntry> done;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto e = batch_entry_from_json(nlohmann::json::parse(line));
      if (e.algebra == algebra && e.mode == mode && e.status != SolveStatus::Unknown) {
        e.resumed = true;
        done[e.n] = std::move(e);
      }
    } catch (const std::exception&) {
      // A torn last line from an interrupted run is simply redone.
    }
  }
  return done;
}

std::string sanitize(std::string s) {
  for (auto& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') c = '_';
  return s;
}

BatchEntry solve_one(const AlgebraSpec& spec, int n, const BatchOptions& opts) {
  BatchEntry e;
  e.algebra = spec.name();
  e.mode = opts.mode;
  e.n = n;
  CnfFormula cnf;
  try {
    cnf = encode(spec, opts.mode, n, opts.encode);
  } catch (const NoRepresentation& ex) {
    e.status = SolveStatus::Unsat;
    e.note = ex.what();
    return e;
  }
  const auto result = run_solver(cnf, opts.solver);
  e.status = result.status;
  e.seconds = result.seconds;
  if (!result.diagnostic.empty()) e.note = result.diagnostic;
  if (result.status != SolveStatus::Sat) return e;

  try {
    nlohmann::json rep_json;
    bool ok = false;
    if (opts.mode == EncodingMode::Group) {
      const auto rep = decode_group_model(cnf, result.model);
      ok = verify_labeling(spec, rep).valid;
      rep_json = to_json(rep, spec);
    } else {
      const auto rep = decode_points_model(cnf, result.model);
      ok = verify_points(spec, rep).valid;
      rep_json = to_json(rep, spec);
    }
    e.verified = ok;
    if (!ok) e.note = "decoded model failed verification";
    if (!opts.model_dir.empty()) {
      std::filesystem::create_directories(opts.model_dir);
      const auto file = (std::filesystem::path(opts.model_dir) /
                         (sanitize(spec.name()) + "_" + to_string(opts.mode) + "_" + std::to_string(n) + ".json"))
                            .string();
      std::ofstream out(file);
      out << dump_compact(rep_json);
      e.model_file = file;
    }
  } catch (const DecodeError& ex) {
    e.verified = false;
    e.note = std::string("decode failed: ") + ex.what();
  }
  return e;
}

}  // namespace

std::vector<BatchEntry> solve_batch(const AlgebraSpec& spec, const BatchOptions& opts,
                                    const std::function<void(const BatchEntry&)>& on_result) {
  if (opts.n_from > opts.n_to) return {};
  std::map<int, BatchEntry> results;
  if (!opts.results_path.empty()) results = load_completed(opts.results_path, spec.name(), opts.mode);

  std::vector<int> pending;
  for (int n = opts.n_from; n <= opts.n_to; ++n)
    if (!results.contains(n)) pending.push_back(n);

  std::mutex mu;
  std::ofstream log;
  if (!opts.results_path.empty()) log.open(opts.results_path, std::ios::app);
  std::exception_ptr failure;
  std::size_t next = 0;

  const auto worker = [&] {
    for (;;) {
      int n = 0;
      {
        std::lock_guard lock(mu);
        if (next >= pending.size() || failure) return;
        if (opts.solver.cancel != nullptr && opts.solver.cancel->load()) return;
        n = pending[next++];
      }
      try {
        auto e = solve_one(spec, n, opts);
        std::lock_guard lock(mu);
        // Cancelled instances are not logged, so a resumed run redoes them.
        const bool cancelled = opts.solver.cancel != nullptr && opts.solver.cancel->load() &&
                               e.status == SolveStatus::Unknown;
        if (log.is_open() && !cancelled) {
          log << to_json(e).dump() << '\n';
          log.flush();
        }
        if (on_result) on_result(e);
        results[n] = std::move(e);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(opts.workers, static_cast<unsigned>(pending.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<BatchEntry> out;
  for (auto& [n, e] : results)
    if (n >= opts.n_from && n <= opts.n_to) out.push_back(std::move(e));
  return out;
}

}  // namespace relalg
