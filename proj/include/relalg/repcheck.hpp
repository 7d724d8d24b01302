#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "relalg/algebra.hpp"
#include "relalg/comer.hpp"

namespace relalg {

/// An atom labeling of Z/n \ {0}. Atom c is realized as
/// { (u, v) : label[(v - u) mod n] = c }; label[0] is unused (-1).
struct LabelingRep {
  std::uint64_t n = 0;
  std::vector<int> label;

  int at(std::uint64_t x) const { return label[static_cast<std::size_t>(x % n)]; }
};

/// Atom c is realized as the union of the cosets X_i with group[i] = c.
struct GroupingRep {
  std::shared_ptr<const CosetPartition> part;
  std::vector<int> group;
};

/// A full labeling of the directed edges of K_n; label[i*n + j] for i != j.
struct PointLabeling {
  int n = 0;
  std::vector<int> label;

  int at(int i, int j) const { return label[static_cast<std::size_t>(i * n + j)]; }
};

// Sites are interpreted per representation kind:
//   labeling: vertices of the translated triangle (0, x, y) in Z/n
//   grouping: coset indices
//   points:   vertices of K_n
struct ConverseViolation {
  std::array<std::uint64_t, 2> sites{};
  int atom = 0;
  int partner_atom = 0;
};

/// Edge sites[0]->sites[1] carries triple.x, sites[0]->sites[2] carries
/// triple.y and sites[2]->sites[1] carries triple.z.
struct ForbiddenHit {
  Triple triple;
  std::array<std::uint64_t, 3> sites{};
};

struct UnmetNeed {
  std::array<std::uint64_t, 2> sites{};
  int atom = 0;
  AtomPair need;
};

template <class T>
struct WitnessList {
  std::vector<T> items;
  std::size_t count = 0;
  std::size_t cap = 10;

  void add(T item) {
    if (items.size() < cap) items.push_back(std::move(item));
    ++count;
  }
  bool empty() const noexcept { return count == 0; }
};

struct VerifyReport {
  std::string kind;
  bool valid = false;
  WitnessList<ConverseViolation> converse_violations;
  WitnessList<ForbiddenHit> forbidden_hits;
  WitnessList<UnmetNeed> unmet_needs;
  std::vector<int> empty_atoms;

  explicit VerifyReport(std::string k = {}, std::size_t cap = 10);
  void finalize() {
    valid = converse_violations.empty() && forbidden_hits.empty() && unmet_needs.empty() && empty_atoms.empty();
  }
};

nlohmann::json to_json(const VerifyReport& report, const AlgebraSpec& spec);

class PartialLabeling : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks, in order: converse closure of the labeling, nonempty atoms, no
/// forbidden triangle, every need met. Translation invariance makes
/// triangles through 0 sufficient.
VerifyReport verify_labeling(const AlgebraSpec& spec, const LabelingRep& rep, std::size_t cap = 10);

struct Incoherence {
  Triple triple;
  int covered = 0;    ///< coset of rho(x) inside rho(y);rho(z)
  int uncovered = 0;  ///< coset of rho(x) disjoint from it
};

struct InducedTriples {
  TripleSet forbidden;
  bool coherent = true;
  std::vector<Incoherence> incoherent;  ///< capped
  std::size_t incoherent_count = 0;
};

/// Forbidden-triple set of a grouped coset structure, from CycleTable
/// lookups only. Throws PartialLabeling for an out-of-range group entry.
InducedTriples induced_triples(const GroupingRep& rep, int atom_count, std::size_t cap = 10);
InducedTriples induced_triples(const GroupingRep& rep, const CycleTable& table, int atom_count,
                               std::size_t cap = 10);

VerifyReport verify_grouping(const AlgebraSpec& spec, const GroupingRep& rep, std::size_t cap = 10);
VerifyReport verify_grouping(const AlgebraSpec& spec, const GroupingRep& rep, const CycleTable& table,
                             std::size_t cap = 10);

/// Element-level view of a grouping over Z/p.
LabelingRep to_labeling(const GroupingRep& rep);

/// Point-graph counterpart of verify_labeling over all triangles of K_n.
VerifyReport verify_points(const AlgebraSpec& spec, const PointLabeling& rep, std::size_t cap = 10);

}  // namespace relalg
