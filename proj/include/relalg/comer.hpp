#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "relalg/algebra.hpp"

namespace relalg {

/// The multiplicative cosets X_0..X_{m-1} of the index-m subgroup H = X_0 of
/// F_p^x, with X_i = { g^(a*m + i) }. Membership is an O(1) table lookup.
class CosetPartition {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 26;

  /// Uses the smallest primitive root as generator.
  CosetPartition(std::uint64_t p, int m);
  /// Uses `g`, which must be a primitive root mod p.
  CosetPartition(std::uint64_t p, int m, std::uint64_t g);

  std::uint64_t p() const noexcept { return p_; }
  int m() const noexcept { return m_; }
  std::uint64_t g() const noexcept { return g_; }
  std::uint64_t coset_size() const noexcept { return (p_ - 1) / static_cast<std::uint64_t>(m_); }

  /// Coset index of a residue; -1 for 0.
  int coset_of(std::uint64_t u) const { return index_[static_cast<std::size_t>(u % p_)]; }

  /// Elements of X_i in generator order g^i, g^(m+i), ...
  std::span<const std::uint32_t> elements(int i) const;

  /// X_i = -X_i for every i, which holds exactly when |X_i| is even.
  bool is_symmetric() const noexcept { return coset_size() % 2 == 0; }

  /// The j with -X_i = X_j.
  int converse_index(int i) const;

  /// g^e mod p.
  std::uint64_t generator_power(std::uint64_t e) const;

 private:
  void build();

  std::uint64_t p_;
  int m_;
  std::uint64_t g_;
  std::vector<std::int32_t> index_;
  std::vector<std::uint32_t> members_;  // coset-major
};

/// T[d][e] is true iff X_0 + X_d contains X_e. By translation symmetry
/// X_i + X_j contains X_k iff T[(j-i) mod m][(k-i) mod m].
class CycleTable {
 public:
  CycleTable(int m, std::vector<std::uint8_t> cells);

  int m() const noexcept { return m_; }
  bool at(int d, int e) const { return cells_[static_cast<std::size_t>(d * m_ + e)] != 0; }

  /// X_i + X_j contains X_k.
  bool contains(int i, int j, int k) const {
    return at(mod(j - i), mod(k - i));
  }

  /// Forbidden triples of the coset algebra: (x, y, z) with X_y + X_z not containing X_x.
  TripleSet forbidden_triples() const;

  /// Rows are d, columns e, cells 0/1.
  std::string to_csv() const;

  bool operator==(const CycleTable&) const = default;

 private:
  int mod(int v) const noexcept { return ((v % m_) + m_) % m_; }

  int m_;
  std::vector<std::uint8_t> cells_;
};

/// Fast path. Because X_0 + X_d is closed under multiplication by H,
/// containment of X_e reduces to membership of the single representative
/// g^e, which is tested by walking a over X_0 and looking up g^e - a.
CycleTable cycle_table(const CosetPartition& part);

/// Brute-force reference: full sumsets X_i + X_j for every (i, j), and full
/// containment of every X_k. Throws for p > kOracleLimit.
struct SumsetCube {
  int m;
  std::vector<std::uint8_t> cells;  // [i][j][k]
  bool contains(int i, int j, int k) const {
    return cells[(static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)) *
                     static_cast<std::size_t>(m) +
                 static_cast<std::size_t>(k)] != 0;
  }
};
inline constexpr std::uint64_t kOracleLimit = 10000;
SumsetCube sumset_cube_oracle(const CosetPartition& part);
CycleTable cycle_table_oracle(const CosetPartition& part);

enum class Pattern { Color, SplitSym, SplitAsym, Other };
std::string to_string(Pattern p);

struct Classification {
  std::uint64_t p = 0;
  int m = 0;
  std::uint64_t g = 0;
  bool symmetric = false;
  Pattern pattern = Pattern::Other;
  int colors = 0;
  /// Partner coset per index for split patterns; empty otherwise.
  std::vector<int> pairing;
  /// Symmetric difference against the closest pattern; capped, see deviation_count.
  std::vector<Triple> deviations;
  std::size_t deviation_count = 0;
};

inline constexpr std::size_t kDeviationCap = 20;

Classification classify(const CosetPartition& part, const CycleTable& table);
Classification classify(const CosetPartition& part);

nlohmann::json to_json(const Classification& c);

enum class ScanMode { Color, SplitSym, SplitAsym };
std::string to_string(ScanMode mode);
ScanMode scan_mode_from_string(std::string_view s);

struct ScanOptions {
  int colors = 1;
  ScanMode mode = ScanMode::Color;
  /// Defaults to colors^4 + 5 in color mode; required otherwise.
  std::optional<std::uint64_t> max_p;
  unsigned workers = 1;
};

/// Coset count for a scan: k in color mode, 2k in the split modes.
int scan_modulus(const ScanOptions& opts);

/// Primes p <= max_p whose Comer algebra at the mode's m matches the mode's
/// pattern, ascending.
std::vector<std::uint64_t> scan(const ScanOptions& opts);

}  // namespace relalg
