#include "relalg/encode.hpp"

#include <algorithm>

#include "relalg/bound.hpp"

namespace relalg {

namespace {

void check_size(int n) {
  if (n == 1) throw NoRepresentation("no representation: diversity atoms must be nonempty");
  if (n < 2) throw std::invalid_argument("n must be >= 2");
}

void add_exactly_one(CnfFormula& cnf, const std::vector<int>& vars) {
  cnf.add_clause(std::vector<int>(vars));
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b) cnf.add_clause({-vars[a], -vars[b]});
}

// Sequential-counter encoding of sum(vars) <= bound.
void add_at_most(CnfFormula& cnf, const std::vector<int>& vars, int bound) {
  const int n = static_cast<int>(vars.size());
  if (bound >= n) return;
  if (bound <= 0) {
    for (int v : vars) cnf.add_clause({-v});
    return;
  }
  // s[i][j]: at least j+1 of vars[0..i] are true.
  std::vector<std::vector<int>> s(static_cast<std::size_t>(n - 1), std::vector<int>(static_cast<std::size_t>(bound)));
  for (auto& row : s)
    for (auto& v : row) v = cnf.new_var();
  const auto S = [&](int i, int j) { return s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  const auto X = [&](int i) { return vars[static_cast<std::size_t>(i)]; };

  cnf.add_clause({-X(0), S(0, 0)});
  for (int j = 1; j < bound; ++j) cnf.add_clause({-S(0, j)});
  for (int i = 1; i < n - 1; ++i) {
    cnf.add_clause({-X(i), S(i, 0)});
    cnf.add_clause({-S(i - 1, 0), S(i, 0)});
    for (int j = 1; j < bound; ++j) {
      cnf.add_clause({-X(i), -S(i - 1, j - 1), S(i, j)});
      cnf.add_clause({-S(i - 1, j), S(i, j)});
    }
    cnf.add_clause({-X(i), -S(i - 1, bound - 1)});
  }
  cnf.add_clause({-X(n - 1), -S(n - 2, bound - 1)});
}

// Every (c1, c2) needed by at least one atom, in ascending order.
std::vector<AtomPair> union_of_needs(const NeedsTable& needs) {
  std::vector<AtomPair> out;
  for (int k = 0; k < needs.atom_count(); ++k)
    for (const auto& p : needs.needs(k)) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t pair_slot(const AtomPair& p, int atom_count) {
  return static_cast<std::size_t>(p.first * atom_count + p.second);
}

}  // namespace

CnfFormula encode_group(const AlgebraSpec& spec, int n, const EncodeOptions& opts) {
  check_size(n);
  if (opts.degree_bounds || opts.symmetry_break_atom) {
    throw std::invalid_argument("symmetry breaking and degree bounds apply to point mode only");
  }
  const int K = spec.atom_count();
  const auto var = [K](int x, int k) { return group_var(x, k, K); };
  const auto neg = [n](int x) { return (n - x) % n; };

  CnfFormula cnf;
  cnf.algebra = spec.name();
  cnf.mode = EncodingMode::Group;
  cnf.n = n;
  cnf.atom_count = K;
  cnf.reserve_primary((n - 1) * K);

  // Exactly one atom per element.
  for (int x = 1; x < n; ++x) {
    std::vector<int> vars;
    for (int k = 0; k < K; ++k) vars.push_back(var(x, k));
    add_exactly_one(cnf, vars);
  }

  // Converse coupling through the algebra's converse map: k on x forces
  // conv(k) on -x. When x = -x this forbids asymmetric atoms on x.
  for (int x = 1; x < n; ++x) {
    for (int k = 0; k < K; ++k) {
      const int lhs = var(x, k);
      const int rhs = var(neg(x), spec.converse(k));
      if (lhs == rhs) continue;
      cnf.add_clause({-lhs, rhs});
    }
  }

  // Needs. w(x, c1, c2, y) <-> phi(y, c1) & phi(x - y, c2); auxiliaries are
  // shared by every atom whose need set contains (c1, c2).
  const auto needs = needs_of(spec);
  const auto pairs = union_of_needs(needs);
  std::vector<std::vector<int>> witnesses(static_cast<std::size_t>(K * K));
  for (int x = 1; x < n; ++x) {
    for (auto& w : witnesses) w.clear();
    for (const auto& pr : pairs) {
      auto& ws = witnesses[pair_slot(pr, K)];
      for (int y = 1; y < n; ++y) {
        const int z = ((x - y) % n + n) % n;
        if (z == 0) continue;
        const int w = cnf.new_var();
        const int a = var(y, pr.first);
        const int b = var(z, pr.second);
        cnf.add_clause({-w, a});
        cnf.add_clause({-w, b});
        cnf.add_clause({w, -a, -b});
        ws.push_back(w);
      }
    }
    for (int k = 0; k < K; ++k) {
      for (const auto& pr : needs.needs(k)) {
        std::vector<int> clause{-var(x, k)};
        const auto& ws = witnesses[pair_slot(pr, K)];
        clause.insert(clause.end(), ws.begin(), ws.end());
        cnf.add_clause(std::move(clause));
      }
    }
  }

  // Forbidden triangles: 0 -> y -> y+z carries (label(y+z), label(y), label(z)).
  for (int y = 1; y < n; ++y) {
    for (int z = 1; z < n; ++z) {
      const int s = (y + z) % n;
      if (s == 0) continue;
      for (const auto& t : spec.forbidden()) cnf.add_clause({-var(y, t.y), -var(z, t.z), -var(s, t.x)});
    }
  }

  if (opts.nonempty_atoms) {
    for (int k = 0; k < K; ++k) {
      std::vector<int> clause;
      for (int x = 1; x < n; ++x) clause.push_back(var(x, k));
      cnf.add_clause(std::move(clause));
    }
  }
  return cnf;
}

CnfFormula encode_points(const AlgebraSpec& spec, int n, const EncodeOptions& opts) {
  check_size(n);
  const int K = spec.atom_count();
  const auto var = [n, K](int i, int j, int k) { return point_var(i, j, k, n, K); };

  std::optional<BoundDerivation> bound;
  if (opts.degree_bounds) {
    bound = point_bound(spec);
    if (!bound) throw std::invalid_argument("no degree bounds derived for " + spec.name());
  }
  if (opts.symmetry_break_atom && (*opts.symmetry_break_atom < 0 || *opts.symmetry_break_atom >= K)) {
    throw std::invalid_argument("symmetry-break atom out of range");
  }

  CnfFormula cnf;
  cnf.algebra = spec.name();
  cnf.mode = EncodingMode::Points;
  cnf.n = n;
  cnf.atom_count = K;
  cnf.reserve_primary(n * (n - 1) * K);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<int> vars;
      for (int k = 0; k < K; ++k) vars.push_back(var(i, j, k));
      add_exactly_one(cnf, vars);
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < K; ++k) cnf.add_clause({-var(i, j, k), var(j, i, spec.converse(k))});
    }

  // Needs of edge (i, j): w(i, j, c1, c2, v) <-> phi(i, v, c1) & phi(v, j, c2).
  const auto needs = needs_of(spec);
  const auto pairs = union_of_needs(needs);
  std::vector<std::vector<int>> witnesses(static_cast<std::size_t>(K * K));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (auto& w : witnesses) w.clear();
      for (const auto& pr : pairs) {
        auto& ws = witnesses[pair_slot(pr, K)];
        for (int v = 0; v < n; ++v) {
          if (v == i || v == j) continue;
          const int w = cnf.new_var();
          const int a = var(i, v, pr.first);
          const int b = var(v, j, pr.second);
          cnf.add_clause({-w, a});
          cnf.add_clause({-w, b});
          cnf.add_clause({w, -a, -b});
          ws.push_back(w);
        }
      }
      for (int k = 0; k < K; ++k) {
        for (const auto& pr : needs.needs(k)) {
          std::vector<int> clause{-var(i, j, k)};
          const auto& ws = witnesses[pair_slot(pr, K)];
          clause.insert(clause.end(), ws.begin(), ws.end());
          cnf.add_clause(std::move(clause));
        }
      }
    }
  }

  // Each triangle once, with bottom edge (i, j) for i < j < v.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int v = j + 1; v < n; ++v)
        for (const auto& t : spec.forbidden()) cnf.add_clause({-var(i, j, t.x), -var(i, v, t.y), -var(v, j, t.z)});

  if (opts.symmetry_break_atom) cnf.add_clause({var(0, 1, *opts.symmetry_break_atom)});

  if (opts.nonempty_atoms) {
    for (int k = 0; k < K; ++k) {
      std::vector<int> clause;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) clause.push_back(var(i, j, k));
      cnf.add_clause(std::move(clause));
    }
  }

  if (bound) {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < K; ++k) {
        std::vector<int> out_edges;
        for (int j = 0; j < n; ++j)
          if (j != i) out_edges.push_back(var(i, j, k));
        add_at_most(cnf, out_edges, bound->degree_caps[static_cast<std::size_t>(k)]);
      }
    }
  }
  return cnf;
}

CnfFormula encode(const AlgebraSpec& spec, EncodingMode mode, int n, const EncodeOptions& opts) {
  return mode == EncodingMode::Group ? encode_group(spec, n, opts) : encode_points(spec, n, opts);
}

namespace {

std::vector<std::uint8_t> truth_table(const CnfFormula& cnf, std::span<const int> model) {
  std::vector<std::uint8_t> truth(static_cast<std::size_t>(cnf.primary_vars) + 1, 0);
  for (int v : model) {
    if (v > 0 && v <= cnf.primary_vars) truth[static_cast<std::size_t>(v)] = 1;
  }
  return truth;
}

int exactly_one(const std::vector<std::uint8_t>& truth, int first_var, int atom_count, const std::string& site) {
  int found = -1;
  for (int k = 0; k < atom_count; ++k) {
    if (truth[static_cast<std::size_t>(first_var + k)]) {
      if (found >= 0) throw DecodeError("site " + site + " carries two atoms");
      found = k;
    }
  }
  if (found < 0) throw DecodeError("site " + site + " carries no atom");
  return found;
}

}  // namespace

LabelingRep decode_group_model(const CnfFormula& cnf, std::span<const int> model) {
  if (cnf.mode != EncodingMode::Group) throw DecodeError("formula is not a group encoding");
  const auto truth = truth_table(cnf, model);
  const auto n = static_cast<std::uint64_t>(cnf.n);
  LabelingRep rep{n, std::vector<int>(static_cast<std::size_t>(n), -1)};
  for (int x = 1; x < cnf.n; ++x) {
    rep.label[static_cast<std::size_t>(x)] =
        exactly_one(truth, group_var(x, 0, cnf.atom_count), cnf.atom_count, std::to_string(x));
  }
  return rep;
}

PointLabeling decode_points_model(const CnfFormula& cnf, std::span<const int> model) {
  if (cnf.mode != EncodingMode::Points) throw DecodeError("formula is not a point encoding");
  const auto truth = truth_table(cnf, model);
  const int n = cnf.n;
  PointLabeling rep{n, std::vector<int>(static_cast<std::size_t>(n * n), -1)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      rep.label[static_cast<std::size_t>(i * n + j)] =
          exactly_one(truth, point_var(i, j, 0, n, cnf.atom_count), cnf.atom_count,
                      "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return rep;
}

}  // namespace relalg
