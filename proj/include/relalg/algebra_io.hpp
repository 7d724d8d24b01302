#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "relalg/algebra.hpp"

namespace relalg {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text form:
//   name: 1311_1316; atoms: a b r r'; conv: a=a b=b r=r'; forbid: aaa bbb rrr
// `forbid` lists generators; the parsed set is their Peircean closure.
// Atoms missing from `conv` are symmetric, and x=y also sets conv(y)=x.
AlgebraSpec parse_algebra_text(std::string_view text);
std::string to_text(const AlgebraSpec& spec);

// JSON form: {"name", "atoms": [names], "converse": [indices], "forbidden": [[x,y,z], ...]}.
// The forbidden array is taken verbatim.
AlgebraSpec algebra_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AlgebraSpec& spec);

/// Accepts either form; JSON is recognized by a leading '{'.
AlgebraSpec parse_algebra(std::string_view text);

/// Lexicographically least member of each Peircean orbit of the forbidden set.
TripleSet orbit_representatives(const AlgebraSpec& spec);

}  // namespace relalg
