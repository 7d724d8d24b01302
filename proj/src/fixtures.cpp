#include "relalg/fixtures.hpp"

#include <numeric>

namespace relalg {

namespace {

using Ints = std::vector<int>;

Ints range_incl(int lo, int hi) {
  Ints out(static_cast<std::size_t>(hi - lo + 1));
  std::iota(out.begin(), out.end(), lo);
  return out;
}

Ints concat(Ints a, const Ints& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::vector<Fixture> shipped_fixtures() {
  const Ints z38_a = {1, 5, 6, 8, 9, 14, 16, 17, 18, 19, 20, 21, 22, 24, 29, 30, 32, 33, 37};
  const Ints z38_r = {3, 7, 10, 11, 13, 23, 26, 34, 36};
  const Ints z38_rc = {2, 4, 12, 15, 25, 27, 28, 31, 35};
  // 3 and 2 traded between r and r_conv.
  const Ints z38_r_mut = {2, 7, 10, 11, 13, 23, 26, 34, 36};
  const Ints z38_rc_mut = {3, 4, 12, 15, 25, 27, 28, 31, 35};

  std::vector<Fixture> out;
  out.push_back({"z38.json", "33_37", "33_37 over Z/38",
                 {{"modulus", 38}, {"atoms", {{"a", z38_a}, {"r", z38_r}, {"r_conv", z38_rc}}}}, true});
  out.push_back({"z38_mutated.json", "33_37", "Z/38 labeling with 2 and 3 swapped between r and r_conv",
                 {{"modulus", 38}, {"atoms", {{"a", z38_a}, {"r", z38_r_mut}, {"r_conv", z38_rc_mut}}}}, false});
  out.push_back({"f71.json", "1314_1316", "1314_1316 over F_71 with 10 cosets",
                 {{"p", 71},
                  {"m", 10},
                  {"groups", {{"a", Ints{3, 8}}, {"b", Ints{4, 9}}, {"r", Ints{0, 1, 2}}, {"r_conv", Ints{5, 6, 7}}}}},
                 true});
  out.push_back({"p33791_31_37.json", "31_37", "31_37 over F_33791 with 62 cosets",
                 {{"p", 33791},
                  {"m", 62},
                  {"groups", {{"a", concat(range_incl(1, 30), range_incl(32, 61))}, {"r", Ints{0}}, {"r_conv", Ints{31}}}}},
                 true});
  out.push_back({"p33791_1306_1314.json", "1306_1314", "1306_1314 over F_33791 with 62 cosets",
                 {{"p", 33791},
                  {"m", 62},
                  {"groups",
                   {{"a", concat(range_incl(2, 30), range_incl(33, 61))},
                    {"b", Ints{1, 32}},
                    {"r", Ints{0}},
                    {"r_conv", Ints{31}}}}},
                 true});
  out.push_back({"p751181_32_65.json", "32_65", "32_65 over F_751181 with 115 cosets",
                 {{"p", 751181}, {"m", 115}, {"groups", {{"a", range_incl(2, 114)}, {"b", Ints{0}}, {"c", Ints{1}}}}},
                 true});
  return out;
}

}  // namespace relalg
