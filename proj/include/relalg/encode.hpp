#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "relalg/algebra.hpp"
#include "relalg/cnf.hpp"
#include "relalg/repcheck.hpp"

namespace relalg {

struct EncodeOptions {
  /// Point mode: force edge (0,1) to this atom. Any representation has an
  /// edge of every atom, and vertices can be renamed to put it at (0,1).
  std::optional<int> symmetry_break_atom;
  /// Point mode, 1311_1316 only: cap each vertex's out-degree per atom.
  bool degree_bounds = false;
  /// One "atom is used somewhere" clause per atom.
  bool nonempty_atoms = false;
};

class NoRepresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Primary variable for element x of Z/n (1 <= x < n) carrying atom k.
inline int group_var(int x, int k, int atom_count) { return (x - 1) * atom_count + k + 1; }

/// Lexicographic index of the directed pair (i, j), i != j, in K_n.
inline int edge_index(int i, int j, int n) { return i * (n - 1) + (j < i ? j : j - 1); }
inline int point_var(int i, int j, int k, int n, int atom_count) { return edge_index(i, j, n) * atom_count + k + 1; }

/// Labelings of Z/n \ {0} that represent `spec` as a cyclic group:
/// exactly-one per element, converse coupling x -> -x, every need met
/// through a witness y with x = y + (x - y), no forbidden triangle.
CnfFormula encode_group(const AlgebraSpec& spec, int n, const EncodeOptions& opts = {});

/// Labelings of the directed edges of K_n: exactly-one per edge, converse
/// coupling (i,j) -> (j,i), needs met by a third vertex, and for each
/// i < j < k and forbidden (c1,c2,c3) the clause
/// -phi(i,j,c1) | -phi(i,k,c2) | -phi(k,j,c3).
CnfFormula encode_points(const AlgebraSpec& spec, int n, const EncodeOptions& opts = {});

CnfFormula encode(const AlgebraSpec& spec, EncodingMode mode, int n, const EncodeOptions& opts = {});

/// Number of exactly-one clauses in group mode: (n-1) * (1 + K(K-1)/2).
inline std::size_t group_exactly_one_clause_count(int n, int atom_count) {
  return static_cast<std::size_t>(n - 1) * (1 + static_cast<std::size_t>(atom_count * (atom_count - 1) / 2));
}

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `model` lists the variables assigned true; auxiliaries are ignored.
LabelingRep decode_group_model(const CnfFormula& cnf, std::span<const int> model);
PointLabeling decode_points_model(const CnfFormula& cnf, std::span<const int> model);

}  // namespace relalg
