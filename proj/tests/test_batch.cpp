#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "relalg/batch.hpp"
#include "relalg/rep_io.hpp"
#include "support.hpp"

using namespace relalg;
namespace fs = std::filesystem;

namespace {

struct ScratchDir {
  fs::path path;
  explicit ScratchDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

BatchOptions group_batch(int from, int to) {
  BatchOptions o;
  o.mode = EncodingMode::Group;
  o.n_from = from;
  o.n_to = to;
  o.solver.command = testing::solver_command();
  return o;
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("batch") {
  TEST_CASE("verdicts match exhaustive search and every SAT model verifies") {
    const auto spec = catalog_get("33_37");
    const auto results = solve_batch(spec, group_batch(1, 9));
    REQUIRE(results.size() == 9);
    for (const auto& e : results) {
      if (e.n == 1) {
        CHECK(e.status == SolveStatus::Unsat);
        CHECK_FALSE(e.note.empty());
        continue;
      }
      CHECK_MESSAGE((e.status == SolveStatus::Sat) == testing::exists_group_representation(spec, e.n), e.n);
      if (e.status == SolveStatus::Sat) CHECK(e.verified == std::optional<bool>(true));
    }
  }

  TEST_CASE("results are ordered and independent of the worker count") {
    const auto spec = catalog_get("E(2)");
    auto opts = group_batch(2, 12);
    const auto serial = solve_batch(spec, opts);
    opts.workers = 4;
    const auto parallel = solve_batch(spec, opts);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].n == static_cast<int>(i) + 2);
      CHECK(parallel[i].n == serial[i].n);
      CHECK(parallel[i].status == serial[i].status);
    }
    CHECK(serial[3].status == SolveStatus::Sat);  // Z/5
  }

  TEST_CASE("a results log is resumed") {
    ScratchDir dir("relalg-batch-resume");
    const auto spec = catalog_get("E(2)");
    auto opts = group_batch(2, 6);
    opts.results_path = (dir.path / "runs.jsonl").string();

    int calls = 0;
    const auto first = solve_batch(spec, opts, [&](const BatchEntry&) { ++calls; });
    CHECK(calls == 5);
    CHECK(lines_of(opts.results_path).size() == 5);
    for (const auto& e : first) CHECK_FALSE(e.resumed);

    // Wider range: 2..6 come from the log, only 7 and 8 run.
    opts.n_to = 8;
    calls = 0;
    const auto second = solve_batch(spec, opts, [&](const BatchEntry&) { ++calls; });
    CHECK(calls == 2);
    REQUIRE(second.size() == 7);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(second[i].resumed);
      CHECK(second[i].status == first[i].status);
    }
    CHECK_FALSE(second[5].resumed);
    CHECK(lines_of(opts.results_path).size() == 7);
  }

  TEST_CASE("unknown and torn log lines are rerun") {
    ScratchDir dir("relalg-batch-torn");
    const auto spec = catalog_get("E(2)");
    auto opts = group_batch(4, 6);
    opts.results_path = (dir.path / "runs.jsonl").string();
    {
      std::ofstream out(opts.results_path);
      out << R"j({"algebra":"E(2)","mode":"group","n":4,"status":"unsat","seconds":0.1})j" << '\n';
      out << R"j({"algebra":"E(2)","mode":"group","n":5,"status":"unknown","seconds":9.0})j" << '\n';
      out << R"j({"algebra":"E(2)","mode":"points","n":6,"status":"sat","seconds":0.1})j" << '\n';
      out << R"j({"algebra":"E(2)","mode":"gro)j";
    }
    const auto results = solve_batch(spec, opts);
    REQUIRE(results.size() == 3);
    CHECK(results[0].resumed);
    CHECK(results[0].status == SolveStatus::Unsat);  // taken from the log as written
    CHECK_FALSE(results[1].resumed);
    CHECK(results[1].status == SolveStatus::Sat);
    CHECK_FALSE(results[2].resumed);
  }

  TEST_CASE("SAT models are written as verifiable representations") {
    ScratchDir dir("relalg-batch-models");
    const auto spec = catalog_get("33_37");
    auto opts = group_batch(29, 29);
    opts.model_dir = (dir.path / "models").string();
    const auto results = solve_batch(spec, opts);
    REQUIRE(results.size() == 1);
    REQUIRE(results[0].model_file.has_value());
    const auto rep = representation_from_json(read_json_file(*results[0].model_file), spec);
    CHECK(verify(spec, rep).valid);
  }

  TEST_CASE("entries round-trip through JSON") {
    BatchEntry e;
    e.algebra = "1311_1316";
    e.mode = EncodingMode::Points;
    e.n = 14;
    e.status = SolveStatus::Unsat;
    e.seconds = 51.4567;
    e.note = "x";
    const auto back = batch_entry_from_json(to_json(e));
    CHECK(back.algebra == e.algebra);
    CHECK(back.mode == e.mode);
    CHECK(back.n == 14);
    CHECK(back.status == SolveStatus::Unsat);
    CHECK(back.seconds == doctest::Approx(51.457));
    CHECK(back.note == "x");
    CHECK_FALSE(back.verified.has_value());
  }

  TEST_CASE("launch failures propagate") {
    auto opts = group_batch(3, 4);
    opts.solver.command = "/nonexistent/sat-solver";
    CHECK_THROWS_AS(solve_batch(catalog_get("E(2)"), opts), SolverLaunchError);
  }
}
