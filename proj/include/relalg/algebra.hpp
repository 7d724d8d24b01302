#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relalg {

/// A diversity-atom triple (x, y, z), read as the assertion x . (y ; z).
/// Forbidden means x . (y ; z) = 0, anything else is mandatory.
struct Triple {
  int x = 0;
  int y = 0;
  int z = 0;
  auto operator<=>(const Triple&) const = default;
};

using TripleSet = std::set<Triple>;
using AtomPair = std::pair<int, int>;

/// One diversity atom. The identity 1' is implicit and never listed.
struct AtomSig {
  std::string name;
  int converse = 0;  ///< index of the converse atom, self for symmetric atoms
  bool operator==(const AtomSig&) const = default;
};

class UnknownAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite integral relation algebra given by its diversity atoms and its
/// forbidden diversity triples. Construction does not validate; see
/// validate_spec.
class AlgebraSpec {
 public:
  AlgebraSpec() = default;
  AlgebraSpec(std::string name, std::vector<AtomSig> atoms, TripleSet forbidden);

  const std::string& name() const noexcept { return name_; }
  const std::vector<AtomSig>& atoms() const noexcept { return atoms_; }
  const TripleSet& forbidden() const noexcept { return forbidden_; }
  int atom_count() const noexcept { return static_cast<int>(atoms_.size()); }

  int converse(int atom) const { return atoms_.at(static_cast<std::size_t>(atom)).converse; }
  bool is_symmetric(int atom) const { return converse(atom) == atom; }
  const std::string& atom_name(int atom) const { return atoms_.at(static_cast<std::size_t>(atom)).name; }

  /// O(1) membership test; indices must be in range.
  bool forbids(int x, int y, int z) const noexcept {
    const auto k = static_cast<std::size_t>(atoms_.size());
    return table_[(static_cast<std::size_t>(x) * k + static_cast<std::size_t>(y)) * k +
                  static_cast<std::size_t>(z)];
  }
  bool forbids(const Triple& t) const noexcept { return forbids(t.x, t.y, t.z); }

  /// Resolves an atom by name. "<name>_conv" names the converse of <name>.
  std::optional<int> find_atom(std::string_view atom_name) const;
  int atom_index(std::string_view atom_name) const;

  /// Same atoms (names and converses) and same forbidden set; the name is ignored.
  bool same_structure(const AlgebraSpec& other) const {
    return atoms_ == other.atoms_ && forbidden_ == other.forbidden_;
  }

 private:
  std::string name_;
  std::vector<AtomSig> atoms_;
  TripleSet forbidden_;
  std::vector<bool> table_;
};

/// Per-atom need sets: needs(x) holds every (y, z) with (x, y, z) mandatory.
class NeedsTable {
 public:
  explicit NeedsTable(std::vector<std::vector<AtomPair>> needs) : needs_(std::move(needs)) {}
  const std::vector<AtomPair>& needs(int atom) const { return needs_.at(static_cast<std::size_t>(atom)); }
  int atom_count() const noexcept { return static_cast<int>(needs_.size()); }

 private:
  std::vector<std::vector<AtomPair>> needs_;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// The six readings of one labeled triangle:
/// (x,y,z) (x~,z~,y~) (y,x,z~) (y~,z,x~) (z,y~,x) (z~,x~,y), ~ = converse.
std::vector<Triple> peircean_readings(const Triple& t, std::span<const AtomSig> sig);

/// Smallest superset of `triples` closed under the Peircean readings.
/// Throws std::out_of_range on an index outside `sig`.
TripleSet peircean_closure(const TripleSet& triples, std::span<const AtomSig> sig);

NeedsTable needs_of(const AlgebraSpec& spec);

ValidationReport validate_spec(const AlgebraSpec& spec);

/// Catalog lookup: "E(k)" for k >= 1, or one of catalog_names().
AlgebraSpec catalog_get(std::string_view name);
std::vector<std::string> catalog_names();

}  // namespace relalg
