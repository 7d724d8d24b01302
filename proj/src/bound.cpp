#include "relalg/bound.hpp"

namespace relalg {

std::optional<BoundDerivation> point_bound(const AlgebraSpec& spec) {
  if (!spec.same_structure(catalog_get("1311_1316"))) return std::nullopt;

  BoundDerivation d;
  d.algebra = spec.name().empty() ? "1311_1316" : spec.name();
  // Atom order a, b, r, r'.
  const int sym_cap = ramsey::R34 - 1;
  const int r_cap = ramsey::R33 - 1;
  d.degree_caps = {sym_cap, sym_cap, r_cap, r_cap};
  d.coarse_bound = ramsey::R334 - 1;
  d.bound = 1 + sym_cap + sym_cap + r_cap + r_cap;

  d.trace = {
      "every directed K4 contains an rrr chain, so n < R(3,3,4) = " + std::to_string(ramsey::R334) +
          ", i.e. n <= " + std::to_string(d.coarse_bound),
      "a-neighbourhood has no a-edge and is colored by b and r; R(3,4) = " + std::to_string(ramsey::R34) +
          " forces a bbb triangle or an r-K4, so a-degree <= " + std::to_string(sym_cap),
      "by the same argument b-degree <= " + std::to_string(sym_cap),
      "r-out-neighbourhood has no r-edge and is colored by a and b; R(3,3) = " + std::to_string(ramsey::R33) +
          " gives r-out-degree <= " + std::to_string(r_cap),
      "by converse symmetry r-in-degree <= " + std::to_string(r_cap),
      "total degree <= " + std::to_string(r_cap) + "+" + std::to_string(r_cap) + "+" + std::to_string(sym_cap) +
          "+" + std::to_string(sym_cap) + " = " + std::to_string(d.bound - 1) + ", hence n <= " +
          std::to_string(d.bound),
  };
  return d;
}

}  // namespace relalg
