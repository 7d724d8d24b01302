#include "relalg/repcheck.hpp"

#include <algorithm>

namespace relalg {

VerifyReport::VerifyReport(std::string k, std::size_t cap) : kind(std::move(k)) {
  converse_violations.cap = cap;
  forbidden_hits.cap = cap;
  unmet_needs.cap = cap;
}

namespace {

std::string triple_name(const AlgebraSpec& spec, const Triple& t) {
  return spec.atom_name(t.x) + spec.atom_name(t.y) + spec.atom_name(t.z);
}

// Pair occurrence matrix indexed [y * k + z].
class PairSeen {
 public:
  explicit PairSeen(int k) : k_(k), seen_(static_cast<std::size_t>(k * k), 0) {}
  void reset() { std::fill(seen_.begin(), seen_.end(), 0); }
  bool mark(int y, int z) {
    auto& s = seen_[static_cast<std::size_t>(y * k_ + z)];
    const bool first = s == 0;
    s = 1;
    return first;
  }
  bool has(int y, int z) const { return seen_[static_cast<std::size_t>(y * k_ + z)] != 0; }

 private:
  int k_;
  std::vector<std::uint8_t> seen_;
};

}  // namespace

nlohmann::json to_json(const VerifyReport& report, const AlgebraSpec& spec) {
  nlohmann::json j;
  j["kind"] = report.kind;
  j["algebra"] = spec.name();
  j["valid"] = report.valid;

  auto& cv = j["converse_violations"];
  cv["count"] = report.converse_violations.count;
  cv["witnesses"] = nlohmann::json::array();
  for (const auto& w : report.converse_violations.items) {
    cv["witnesses"].push_back({{"sites", w.sites},
                               {"atom", spec.atom_name(w.atom)},
                               {"partner_atom", w.partner_atom < 0 ? std::string("-") : spec.atom_name(w.partner_atom)}});
  }
  auto& fh = j["forbidden_hits"];
  fh["count"] = report.forbidden_hits.count;
  fh["witnesses"] = nlohmann::json::array();
  for (const auto& w : report.forbidden_hits.items) {
    fh["witnesses"].push_back({{"sites", w.sites}, {"cycle", triple_name(spec, w.triple)}});
  }
  auto& un = j["unmet_needs"];
  un["count"] = report.unmet_needs.count;
  un["witnesses"] = nlohmann::json::array();
  for (const auto& w : report.unmet_needs.items) {
    un["witnesses"].push_back({{"sites", w.sites},
                               {"atom", spec.atom_name(w.atom)},
                               {"need", {spec.atom_name(w.need.first), spec.atom_name(w.need.second)}}});
  }
  auto& ea = j["empty_atoms"] = nlohmann::json::array();
  for (int a : report.empty_atoms) ea.push_back(spec.atom_name(a));
  return j;
}

VerifyReport verify_labeling(const AlgebraSpec& spec, const LabelingRep& rep, std::size_t cap) {
  const int k = spec.atom_count();
  const auto n = rep.n;
  if (n < 1 || rep.label.size() != n) throw PartialLabeling("labeling must have one entry per residue");
  for (std::uint64_t x = 1; x < n; ++x) {
    const int c = rep.at(x);
    if (c < 0 || c >= k) throw PartialLabeling("residue " + std::to_string(x) + " is unlabeled");
  }

  VerifyReport report("labeling", cap);

  // (1) converse
  for (std::uint64_t x = 1; x < n; ++x) {
    const int c = rep.at(x);
    const int partner = rep.at(n - x);
    if (partner != spec.converse(c)) report.converse_violations.add({{x, n - x}, c, partner});
  }

  // (2) nonempty atoms
  std::vector<std::uint8_t> used(static_cast<std::size_t>(k), 0);
  for (std::uint64_t x = 1; x < n; ++x) used[static_cast<std::size_t>(rep.at(x))] = 1;
  for (int c = 0; c < k; ++c)
    if (!used[static_cast<std::size_t>(c)]) report.empty_atoms.push_back(c);

  // (3) forbidden triangles and (4) needs, one pass per x: the triangle
  // 0 -> y -> x has labels (label(x), label(y), label(x - y)).
  const auto needs = needs_of(spec);
  PairSeen seen(k);
  for (std::uint64_t x = 1; x < n; ++x) {
    const int cx = rep.at(x);
    seen.reset();
    for (std::uint64_t y = 1; y < n; ++y) {
      if (y == x) continue;
      const std::uint64_t z = (x + n - y) % n;
      const int cy = rep.at(y);
      const int cz = rep.at(z);
      if (seen.mark(cy, cz) && spec.forbids(cx, cy, cz)) {
        report.forbidden_hits.add({{cx, cy, cz}, {0, x, y}});
      }
    }
    for (const auto& need : needs.needs(cx)) {
      if (!seen.has(need.first, need.second)) report.unmet_needs.add({{0, x}, cx, need});
    }
  }

  report.finalize();
  return report;
}

namespace {

void check_grouping_shape(const GroupingRep& rep, int atom_count) {
  if (!rep.part) throw PartialLabeling("grouping has no coset partition");
  if (rep.group.size() != static_cast<std::size_t>(rep.part->m())) {
    throw PartialLabeling("grouping must assign every coset");
  }
  for (std::size_t i = 0; i < rep.group.size(); ++i) {
    if (rep.group[i] < 0 || rep.group[i] >= atom_count) {
      throw PartialLabeling("coset " + std::to_string(i) + " is unassigned");
    }
  }
}

// For every atom pair (y, z): which cosets lie in rho(y);rho(z), with one
// witnessing (i, j) per covered coset. covered[(y*K + z)*m + k] = i*m + j + 1, 0 if not covered.
struct Coverage {
  int m;
  int k;
  std::vector<std::vector<int>> members;
  std::vector<std::int64_t> witness;

  std::int64_t at(int y, int z, int coset) const {
    return witness[(static_cast<std::size_t>(y * k + z)) * static_cast<std::size_t>(m) +
                   static_cast<std::size_t>(coset)];
  }
};

Coverage compute_coverage(const GroupingRep& rep, const CycleTable& table, int atom_count) {
  const int m = rep.part->m();
  Coverage cov{m, atom_count, std::vector<std::vector<int>>(static_cast<std::size_t>(atom_count)),
               std::vector<std::int64_t>(static_cast<std::size_t>(atom_count) * atom_count * m, 0)};
  for (int i = 0; i < m; ++i) cov.members[static_cast<std::size_t>(rep.group[static_cast<std::size_t>(i)])].push_back(i);
  for (int y = 0; y < atom_count; ++y) {
    for (int z = 0; z < atom_count; ++z) {
      auto* row = cov.witness.data() + static_cast<std::size_t>(y * atom_count + z) * static_cast<std::size_t>(m);
      for (int i : cov.members[static_cast<std::size_t>(y)]) {
        for (int j : cov.members[static_cast<std::size_t>(z)]) {
          const int d = ((j - i) % m + m) % m;
          for (int e = 0; e < m; ++e) {
            if (!table.at(d, e)) continue;
            auto& slot = row[(i + e) % m];
            if (slot == 0) slot = static_cast<std::int64_t>(i) * m + j + 1;
          }
        }
      }
    }
  }
  return cov;
}

}  // namespace

InducedTriples induced_triples(const GroupingRep& rep, int atom_count, std::size_t cap) {
  check_grouping_shape(rep, atom_count);
  return induced_triples(rep, cycle_table(*rep.part), atom_count, cap);
}

InducedTriples induced_triples(const GroupingRep& rep, const CycleTable& table, int atom_count, std::size_t cap) {
  check_grouping_shape(rep, atom_count);
  const auto cov = compute_coverage(rep, table, atom_count);
  InducedTriples out;
  for (int x = 0; x < atom_count; ++x) {
    const auto& targets = cov.members[static_cast<std::size_t>(x)];
    for (int y = 0; y < atom_count; ++y) {
      for (int z = 0; z < atom_count; ++z) {
        int covered = -1;
        int uncovered = -1;
        for (int c : targets) {
          if (cov.at(y, z, c) != 0) {
            if (covered < 0) covered = c;
          } else if (uncovered < 0) {
            uncovered = c;
          }
        }
        if (covered < 0) out.forbidden.insert({x, y, z});
        if (covered >= 0 && uncovered >= 0) {
          out.coherent = false;
          ++out.incoherent_count;
          if (out.incoherent.size() < cap) out.incoherent.push_back({{x, y, z}, covered, uncovered});
        }
      }
    }
  }
  return out;
}

VerifyReport verify_grouping(const AlgebraSpec& spec, const GroupingRep& rep, std::size_t cap) {
  check_grouping_shape(rep, spec.atom_count());
  return verify_grouping(spec, rep, cycle_table(*rep.part), cap);
}

VerifyReport verify_grouping(const AlgebraSpec& spec, const GroupingRep& rep, const CycleTable& table,
                             std::size_t cap) {
  const int k = spec.atom_count();
  check_grouping_shape(rep, k);
  const auto& part = *rep.part;
  const int m = part.m();
  VerifyReport report("grouping", cap);

  for (int i = 0; i < m; ++i) {
    const int ci = part.converse_index(i);
    const int c = rep.group[static_cast<std::size_t>(i)];
    const int partner = rep.group[static_cast<std::size_t>(ci)];
    if (partner != spec.converse(c)) {
      report.converse_violations.add({{static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(ci)}, c, partner});
    }
  }

  const auto cov = compute_coverage(rep, table, k);
  for (int c = 0; c < k; ++c)
    if (cov.members[static_cast<std::size_t>(c)].empty()) report.empty_atoms.push_back(c);

  // A forbidden triple must miss every coset of rho(x); a mandatory one must
  // cover every coset. Partial coverage fails whichever applies, which is
  // exactly the incoherent case.
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      for (int z = 0; z < k; ++z) {
        const bool forbidden = spec.forbids(x, y, z);
        for (int c : cov.members[static_cast<std::size_t>(x)]) {
          const auto w = cov.at(y, z, c);
          if (forbidden && w != 0) {
            const auto ij = static_cast<std::uint64_t>(w - 1);
            report.forbidden_hits.add(
                {{x, y, z}, {static_cast<std::uint64_t>(c), ij / static_cast<std::uint64_t>(m), ij % static_cast<std::uint64_t>(m)}});
            break;
          }
          if (!forbidden && w == 0) {
            report.unmet_needs.add({{static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(c)}, x, {y, z}});
            break;
          }
        }
      }
    }
  }

  report.finalize();
  return report;
}

LabelingRep to_labeling(const GroupingRep& rep) {
  const auto& part = *rep.part;
  LabelingRep out{part.p(), std::vector<int>(static_cast<std::size_t>(part.p()), -1)};
  for (std::uint64_t u = 1; u < part.p(); ++u) {
    out.label[static_cast<std::size_t>(u)] = rep.group.at(static_cast<std::size_t>(part.coset_of(u)));
  }
  return out;
}

VerifyReport verify_points(const AlgebraSpec& spec, const PointLabeling& rep, std::size_t cap) {
  const int k = spec.atom_count();
  const int n = rep.n;
  if (n < 1 || rep.label.size() != static_cast<std::size_t>(n * n)) {
    throw PartialLabeling("point labeling must be an n*n matrix");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (rep.at(i, j) < 0 || rep.at(i, j) >= k)) {
        throw PartialLabeling("edge (" + std::to_string(i) + "," + std::to_string(j) + ") is unlabeled");
      }

  VerifyReport report("points", cap);
  const auto u = [](int v) { return static_cast<std::uint64_t>(v); };

  std::vector<std::uint8_t> used(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      used[static_cast<std::size_t>(rep.at(i, j))] = 1;
      if (i < j && rep.at(j, i) != spec.converse(rep.at(i, j))) {
        report.converse_violations.add({{u(i), u(j)}, rep.at(i, j), rep.at(j, i)});
      }
    }
  }
  for (int c = 0; c < k; ++c)
    if (!used[static_cast<std::size_t>(c)]) report.empty_atoms.push_back(c);

  const auto needs = needs_of(spec);
  PairSeen seen(k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int cx = rep.at(i, j);
      seen.reset();
      for (int v = 0; v < n; ++v) {
        if (v == i || v == j) continue;
        const int cy = rep.at(i, v);
        const int cz = rep.at(v, j);
        if (seen.mark(cy, cz) && spec.forbids(cx, cy, cz)) report.forbidden_hits.add({{cx, cy, cz}, {u(i), u(j), u(v)}});
      }
      for (const auto& need : needs.needs(cx)) {
        if (!seen.has(need.first, need.second)) report.unmet_needs.add({{u(i), u(j)}, cx, need});
      }
    }
  }

  report.finalize();
  return report;
}

}  // namespace relalg
