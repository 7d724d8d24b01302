#include "relalg/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace relalg {

std::string to_string(EncodingMode mode) { return mode == EncodingMode::Group ? "group" : "points"; }

EncodingMode encoding_mode_from_string(std::string_view s) {
  if (s == "group") return EncodingMode::Group;
  if (s == "points") return EncodingMode::Points;
  throw std::invalid_argument("unknown encoding mode '" + std::string(s) + "'");
}

void CnfFormula::add_clause(std::vector<int> clause) {
  if (clause.empty()) throw std::invalid_argument("empty clause");
  std::vector<int> seen;
  seen.reserve(clause.size());
  for (int lit : clause) {
    if (lit == 0 || std::abs(lit) > var_count_) {
      throw std::invalid_argument("literal " + std::to_string(lit) + " outside 1.." + std::to_string(var_count_));
    }
    if (std::find(seen.begin(), seen.end(), -lit) != seen.end()) {
      throw std::invalid_argument("tautological clause on variable " + std::to_string(std::abs(lit)));
    }
    if (std::find(seen.begin(), seen.end(), lit) == seen.end()) seen.push_back(lit);
  }
  literals_.insert(literals_.end(), seen.begin(), seen.end());
  literals_.push_back(0);
  ++clause_count_;
}

std::vector<std::vector<int>> CnfFormula::clauses() const {
  std::vector<std::vector<int>> out;
  out.reserve(clause_count_);
  for_each_clause([&](std::span<const int> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

std::string emit_dimacs(const CnfFormula& cnf) {
  std::string out;
  out.reserve(cnf.flat().size() * 7 + 128);
  if (!cnf.algebra.empty()) {
    out += "c algebra " + cnf.algebra + "\n";
    out += "c mode " + to_string(cnf.mode) + "\n";
    out += "c n " + std::to_string(cnf.n) + "\n";
    out += "c atoms " + std::to_string(cnf.atom_count) + "\n";
    out += "c primary_vars " + std::to_string(cnf.primary_vars) + "\n";
    out += "c numbering v" + std::to_string(kNumberingVersion) + "\n";
  }
  out += "p cnf " + std::to_string(cnf.var_count()) + " " + std::to_string(cnf.clause_count()) + "\n";
  char buf[16];
  for (int lit : cnf.flat()) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, lit);
    out.append(buf, ptr);
    out += lit == 0 ? '\n' : ' ';
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace relalg
