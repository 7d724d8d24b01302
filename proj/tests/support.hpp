#pragma once

// Test-only oracles. None of these call into the encoders or checkers they
// are used to validate.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "relalg/algebra.hpp"

namespace relalg::testing {

inline std::string solver_command() {
  if (const char* env = std::getenv("RA_SOLVER_CMD")) return env;
  return RELALG_TEST_SOLVER;
}

inline std::string fixture_path(const std::string& name) { return std::string(RELALG_FIXTURE_DIR) + "/" + name; }

/// Direct reading of the representation conditions for a labeling of Z/n:
/// label(-x) = conv(label(x)); every atom used; for each x and each pair of
/// atoms (c1, c2), some y with label(y) = c1 and label(x-y) = c2 exists iff
/// (label(x), c1, c2) is not forbidden.
inline bool labeling_represents(const AlgebraSpec& spec, int n, const std::vector<int>& label) {
  const int k = spec.atom_count();
  std::vector<int> used(static_cast<std::size_t>(k), 0);
  for (int x = 1; x < n; ++x) {
    if (label[static_cast<std::size_t>(n - x)] != spec.converse(label[static_cast<std::size_t>(x)])) return false;
    used[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])] = 1;
  }
  for (int u : used)
    if (!u) return false;
  for (int x = 1; x < n; ++x) {
    for (int c1 = 0; c1 < k; ++c1) {
      for (int c2 = 0; c2 < k; ++c2) {
        bool witnessed = false;
        for (int y = 1; y < n && !witnessed; ++y) {
          const int z = (x - y + n) % n;
          witnessed = z != 0 && label[static_cast<std::size_t>(y)] == c1 && label[static_cast<std::size_t>(z)] == c2;
        }
        if (witnessed == spec.forbids(label[static_cast<std::size_t>(x)], c1, c2)) return false;
      }
    }
  }
  return true;
}

/// Exhaustive search over all K^(n-1) labelings of Z/n \ {0}.
inline bool exists_group_representation(const AlgebraSpec& spec, int n) {
  if (n < 2) return false;
  const int k = spec.atom_count();
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  label[0] = -1;
  for (;;) {
    if (labeling_represents(spec, n, label)) return true;
    int pos = 1;
    while (pos < n && ++label[static_cast<std::size_t>(pos)] == k) label[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) return false;
  }
}

/// All 2-colorings of K_n (symmetric, colors 0/1) satisfying E(2): no
/// monochromatic triangle and every (edge, c1, c2) need witnessed.
inline std::vector<std::vector<int>> two_color_representations(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  std::vector<std::vector<int>> found;
  const auto m = edges.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> col(static_cast<std::size_t>(n * n), -1);
    for (std::size_t e = 0; e < m; ++e) {
      const int c = static_cast<int>((mask >> e) & 1U);
      col[static_cast<std::size_t>(edges[e].first * n + edges[e].second)] = c;
      col[static_cast<std::size_t>(edges[e].second * n + edges[e].first)] = c;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i == j) continue;
        const int cx = col[static_cast<std::size_t>(i * n + j)];
        bool seen[2][2] = {{false, false}, {false, false}};
        for (int v = 0; v < n; ++v) {
          if (v == i || v == j) continue;
          seen[col[static_cast<std::size_t>(i * n + v)]][col[static_cast<std::size_t>(v * n + j)]] = true;
        }
        for (int a = 0; a < 2 && ok; ++a)
          for (int b = 0; b < 2 && ok; ++b) {
            const bool forbidden = a == cx && b == cx;
            if (seen[a][b] == forbidden) ok = false;
          }
      }
    if (ok) found.push_back(col);
  }
  return found;
}

/// A random integral algebra on `atoms` atoms with a random converse
/// involution and a random Peircean-closed forbidden set.
inline AlgebraSpec random_spec(std::mt19937_64& rng, int atoms, double density) {
  std::vector<AtomSig> sig;
  std::vector<int> conv(static_cast<std::size_t>(atoms), -1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < atoms; ++i) {
    if (conv[static_cast<std::size_t>(i)] >= 0) continue;
    if (i + 1 < atoms && conv[static_cast<std::size_t>(i + 1)] < 0 && coin(rng) < 0.4) {
      conv[static_cast<std::size_t>(i)] = i + 1;
      conv[static_cast<std::size_t>(i + 1)] = i;
    } else {
      conv[static_cast<std::size_t>(i)] = i;
    }
  }
  for (int i = 0; i < atoms; ++i) sig.push_back({"x" + std::to_string(i), conv[static_cast<std::size_t>(i)]});
  TripleSet gens;
  for (int x = 0; x < atoms; ++x)
    for (int y = 0; y < atoms; ++y)
      for (int z = 0; z < atoms; ++z)
        if (coin(rng) < density) gens.insert({x, y, z});
  return {"random", sig, peircean_closure(gens, sig)};
}

}  // namespace relalg::testing
