#include <thread>

#include "doctest.h"
#include "relalg/cnf.hpp"
#include "relalg/encode.hpp"
#include "relalg/repcheck.hpp"
#include "support.hpp"

using namespace relalg;

namespace {

// Evaluates the formula with primaries fixed and each witness auxiliary set
// to the conjunction it is defined by.
bool satisfied_with_primaries(const CnfFormula& cnf, const std::vector<std::uint8_t>& primary) {
  std::vector<std::uint8_t> value(static_cast<std::size_t>(cnf.var_count()) + 1, 0);
  for (int v = 1; v <= cnf.primary_vars; ++v) value[static_cast<std::size_t>(v)] = primary[static_cast<std::size_t>(v)];
  cnf.for_each_clause([&](std::span<const int> c) {
    if (c.size() != 2 && c.size() != 3) return;
    int aux = 0;
    int negs = 0;
    bool both = true;
    for (int lit : c) {
      if (lit > cnf.primary_vars) {
        aux = lit;
      } else if (lit < 0 && -lit <= cnf.primary_vars) {
        ++negs;
        both = both && value[static_cast<std::size_t>(-lit)];
      }
    }
    if (aux != 0 && negs + 1 == static_cast<int>(c.size()) && both) value[static_cast<std::size_t>(aux)] = 1;
  });
  bool ok = true;
  cnf.for_each_clause([&](std::span<const int> c) {
    bool sat = false;
    for (int lit : c) sat = sat || (lit > 0 ? value[static_cast<std::size_t>(lit)] : !value[static_cast<std::size_t>(-lit)]);
    ok = ok && sat;
  });
  return ok;
}

std::uint64_t hash_of(const CnfFormula& cnf) { return fnv1a64(emit_dimacs(cnf)); }

}  // namespace

TEST_SUITE("satenc") {
  TEST_CASE("variable numbering") {
    CHECK(group_var(1, 0, 3) == 1);
    CHECK(group_var(1, 2, 3) == 3);
    CHECK(group_var(2, 0, 3) == 4);
    CHECK(group_var(28, 2, 3) == 84);
    CHECK(edge_index(0, 1, 5) == 0);
    CHECK(edge_index(1, 0, 5) == 4);
    CHECK(edge_index(4, 3, 5) == 19);
    CHECK(point_var(0, 1, 0, 5, 2) == 1);
    CHECK(point_var(1, 0, 1, 5, 2) == 10);
    std::set<int> seen;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (i != j) seen.insert(edge_index(i, j, 6));
    CHECK(seen.size() == 30);
    CHECK(*seen.begin() == 0);
    CHECK(*seen.rbegin() == 29);
  }

  TEST_CASE("primary variables are contiguous and auxiliaries follow") {
    const auto spec = catalog_get("33_37");
    const auto g = encode_group(spec, 10);
    CHECK(g.primary_vars == 27);
    CHECK(g.var_count() > g.primary_vars);
    const auto p = encode_points(catalog_get("1311_1316"), 5);
    CHECK(p.primary_vars == 5 * 4 * 4);
    CHECK(p.algebra == "1311_1316");
    CHECK(p.mode == EncodingMode::Points);
  }

  TEST_CASE("group encoding opens with the exactly-one block") {
    for (int n : {2, 5, 11}) {
      const auto spec = catalog_get("1311_1316");
      const int K = spec.atom_count();
      const auto cnf = encode_group(spec, n);
      const auto clauses = cnf.clauses();
      const auto count = group_exactly_one_clause_count(n, K);
      CHECK(count == static_cast<std::size_t>(n - 1) * 7);
      REQUIRE(clauses.size() > count);
      std::size_t idx = 0;
      for (int x = 1; x < n; ++x) {
        std::vector<int> at_least;
        for (int k = 0; k < K; ++k) at_least.push_back(group_var(x, k, K));
        CHECK(clauses[idx++] == at_least);
        for (int a = 0; a < K; ++a)
          for (int b = a + 1; b < K; ++b)
            CHECK(clauses[idx++] == std::vector<int>{-group_var(x, a, K), -group_var(x, b, K)});
      }
      CHECK(idx == count);
      CHECK(clauses[idx].size() == 2);  // first converse coupling clause
    }
  }

  TEST_CASE("decoding a model") {
    const auto spec = catalog_get("33_37");
    const auto cnf = encode_group(spec, 4);
    // 1 -> r, 2 -> a, 3 -> r'
    const std::vector<int> model = {2, 4, 9, 100000};
    const auto rep = decode_group_model(cnf, model);
    CHECK(rep.label == std::vector<int>{-1, 1, 0, 2});
    const std::vector<int> two = {1, 2, 4, 9};
    CHECK_THROWS_AS(decode_group_model(cnf, two), DecodeError);
    const std::vector<int> none = {4, 9};
    CHECK_THROWS_AS(decode_group_model(cnf, none), DecodeError);
    CHECK_THROWS_AS(decode_points_model(cnf, model), DecodeError);
  }

  TEST_CASE("group clauses hold exactly on representing labelings") {
    for (const std::string name : {"E(1)", "E(2)", "33_37", "31_37", "1311_1316"}) {
      const auto spec = catalog_get(name);
      const int K = spec.atom_count();
      for (int n = 2; n <= 8; ++n) {
        if (K == 4 && n > 7) break;
        const auto cnf = encode_group(spec, n);
        std::vector<int> label(static_cast<std::size_t>(n), 0);
        label[0] = -1;
        for (;;) {
          std::vector<std::uint8_t> primary(static_cast<std::size_t>(cnf.primary_vars) + 1, 0);
          for (int x = 1; x < n; ++x) primary[static_cast<std::size_t>(group_var(x, label[static_cast<std::size_t>(x)], K))] = 1;
          CHECK_MESSAGE(satisfied_with_primaries(cnf, primary) == testing::labeling_represents(spec, n, label),
                        name, " n=", n);
          int pos = 1;
          while (pos < n && ++label[static_cast<std::size_t>(pos)] == K) label[static_cast<std::size_t>(pos++)] = 0;
          if (pos == n) break;
        }
      }
    }
  }

  TEST_CASE("point clauses hold exactly on representing colorings of E(2)") {
    const auto spec = catalog_get("E(2)");
    for (int n = 3; n <= 6; ++n) {
      const auto cnf = encode_points(spec, n);
      const auto good = testing::two_color_representations(n);
      std::set<std::vector<int>> good_set(good.begin(), good.end());
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        std::vector<int> col(static_cast<std::size_t>(n * n), -1);
        std::vector<std::uint8_t> primary(static_cast<std::size_t>(cnf.primary_vars) + 1, 0);
        for (std::size_t e = 0; e < edges.size(); ++e) {
          const int c = static_cast<int>((mask >> e) & 1U);
          const auto [i, j] = edges[e];
          col[static_cast<std::size_t>(i * n + j)] = col[static_cast<std::size_t>(j * n + i)] = c;
          primary[static_cast<std::size_t>(point_var(i, j, c, n, 2))] = 1;
          primary[static_cast<std::size_t>(point_var(j, i, c, n, 2))] = 1;
        }
        CHECK(satisfied_with_primaries(cnf, primary) == good_set.contains(col));
      }
    }
  }

  TEST_CASE("optional clauses") {
    const auto spec = catalog_get("1311_1316");
    const auto plain = encode_points(spec, 6);
    EncodeOptions sb;
    sb.symmetry_break_atom = 2;
    const auto with_sb = encode_points(spec, 6, sb);
    CHECK(with_sb.clause_count() == plain.clause_count() + 1);
    CHECK(with_sb.clauses().back() == std::vector<int>{point_var(0, 1, 2, 6, 4)});

    EncodeOptions ne;
    ne.nonempty_atoms = true;
    CHECK(encode_points(spec, 6, ne).clause_count() == plain.clause_count() + 4);
    CHECK(encode_group(spec, 6, ne).clause_count() == encode_group(spec, 6).clause_count() + 4);

    EncodeOptions db;
    db.degree_bounds = true;
    CHECK(encode_points(spec, 6, db).clause_count() == plain.clause_count());  // caps exceed n - 1
    const auto capped = encode_points(spec, 12, db);
    CHECK(capped.var_count() > encode_points(spec, 12).var_count());

    CHECK_THROWS_AS(encode_group(spec, 6, sb), std::invalid_argument);
    CHECK_THROWS_AS(encode_group(spec, 6, db), std::invalid_argument);
    CHECK_THROWS_AS(encode_points(catalog_get("33_37"), 6, db), std::invalid_argument);
    sb.symmetry_break_atom = 7;
    CHECK_THROWS_AS(encode_points(spec, 6, sb), std::invalid_argument);
  }

  TEST_CASE("DIMACS output") {
    CnfFormula empty;
    CHECK(emit_dimacs(empty) == "p cnf 0 0\n");
    CnfFormula two;
    two.new_var();
    two.new_var();
    two.add_clause({1, -2});
    CHECK(emit_dimacs(two) == "p cnf 2 1\n1 -2 0\n");

    const auto cnf = encode_group(catalog_get("33_37"), 5);
    const auto text = emit_dimacs(cnf);
    CHECK(text.starts_with("c algebra 33_37\n"));
    CHECK(text.find("c numbering v1\n") != std::string::npos);
    CHECK(text.find("p cnf " + std::to_string(cnf.var_count()) + " " + std::to_string(cnf.clause_count()) + "\n") !=
          std::string::npos);
  }

  TEST_CASE("clause validation") {
    CnfFormula f;
    f.new_var();
    f.new_var();
    CHECK_THROWS_AS(f.add_clause({}), std::invalid_argument);
    CHECK_THROWS_AS(f.add_clause({0}), std::invalid_argument);
    CHECK_THROWS_AS(f.add_clause({3}), std::invalid_argument);
    CHECK_THROWS_AS(f.add_clause({1, -1}), std::invalid_argument);
    f.add_clause({2, 2, -1});
    CHECK(f.clauses() == std::vector<std::vector<int>>{{2, -1}});
  }

  TEST_CASE("encoding is byte-stable") {
    const auto cnf = encode_group(catalog_get("33_37"), 29);
    CHECK(hash_of(cnf) == 1727337912190473093ULL);
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  }

  TEST_CASE("concurrent encodings are identical") {
    const auto spec = catalog_get("1311_1316");
    const auto expected = hash_of(encode_points(spec, 8));
    std::vector<std::uint64_t> got(4);
    {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < got.size(); ++t)
        pool.emplace_back([&, t] { got[t] = hash_of(encode_points(spec, 8)); });
    }
    for (auto h : got) CHECK(h == expected);
  }

  TEST_CASE("size errors") {
    const auto spec = catalog_get("E(2)");
    CHECK_THROWS_AS(encode_group(spec, 1), NoRepresentation);
    CHECK_THROWS_AS(encode_points(spec, 1), NoRepresentation);
    CHECK_THROWS_AS(encode_group(spec, 0), std::invalid_argument);
    CHECK_THROWS_AS(encode(spec, EncodingMode::Points, -3), std::invalid_argument);
    CHECK(encoding_mode_from_string("points") == EncodingMode::Points);
    CHECK_THROWS(encoding_mode_from_string("cube"));
  }
}
