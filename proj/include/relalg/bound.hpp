#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relalg/algebra.hpp"

namespace relalg {

namespace ramsey {
inline constexpr int R33 = 6;    // R(3,3)
inline constexpr int R34 = 9;    // R(3,4)
inline constexpr int R334 = 30;  // R(3,3,4)
}  // namespace ramsey

/// An upper bound on the number of points of any representation, with the
/// per-atom out-degree caps it rests on.
struct BoundDerivation {
  std::string algebra;
  int coarse_bound = 0;  ///< from the multicolor Ramsey number
  int bound = 0;         ///< from the degree sum
  std::vector<int> degree_caps;  ///< max out-degree per atom, indexed like the spec's atoms
  std::vector<std::string> trace;
};

/// Derived only for 1311_1316 (matched by structure, not by name); nullopt
/// means no bound is derived for this algebra.
std::optional<BoundDerivation> point_bound(const AlgebraSpec& spec);

}  // namespace relalg
