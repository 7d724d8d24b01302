#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace relalg {

enum class EncodingMode { Group, Points };
std::string to_string(EncodingMode mode);
EncodingMode encoding_mode_from_string(std::string_view s);

inline constexpr int kNumberingVersion = 1;

/// A CNF formula with the context needed to map primary variables back to
/// (site, atom) pairs. Clauses are stored flat, each terminated by 0.
class CnfFormula {
 public:
  CnfFormula() = default;

  int new_var() { return ++var_count_; }
  int var_count() const noexcept { return var_count_; }
  std::size_t clause_count() const noexcept { return clause_count_; }

  /// Adds a clause after removing duplicate literals. Throws
  /// std::invalid_argument on an empty clause, a zero literal, a literal
  /// beyond var_count, or a clause containing both v and -v.
  void add_clause(std::vector<int> clause);
  void add_clause(std::initializer_list<int> clause) { add_clause(std::vector<int>(clause)); }

  const std::vector<int>& flat() const noexcept { return literals_; }
  std::vector<std::vector<int>> clauses() const;

  template <class Fn>
  void for_each_clause(Fn&& fn) const {
    std::size_t start = 0;
    for (std::size_t i = 0; i < literals_.size(); ++i) {
      if (literals_[i] == 0) {
        fn(std::span<const int>(literals_.data() + start, i - start));
        start = i + 1;
      }
    }
  }

  // Decode context. Empty algebra name means a bare formula.
  std::string algebra;
  EncodingMode mode = EncodingMode::Group;
  int n = 0;
  int atom_count = 0;
  int primary_vars = 0;

  /// Reserves variables 1..count for primary use.
  void reserve_primary(int count) {
    primary_vars = count;
    var_count_ = count;
  }

 private:
  int var_count_ = 0;
  std::size_t clause_count_ = 0;
  std::vector<int> literals_;
};

/// DIMACS text: comment lines carrying the decode context (when present),
/// then "p cnf V C" and one zero-terminated clause per line.
std::string emit_dimacs(const CnfFormula& cnf);

/// Stable 64-bit FNV-1a of a byte string, used for determinism checks.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace relalg
