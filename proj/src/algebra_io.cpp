#include "relalg/algebra_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace relalg {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// Splits a concatenated triple like "rr'r" by greedy longest match on atom names.
Triple split_triple(std::string_view word, const std::vector<std::string>& names) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < word.size()) {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& n = names[i];
      if (n.size() > best_len && word.substr(pos).starts_with(n)) {
        best = static_cast<int>(i);
        best_len = n.size();
      }
    }
    if (best < 0) throw ParseError("cannot split forbidden cycle '" + std::string(word) + "' into atoms");
    parts.push_back(best);
    pos += best_len;
  }
  if (parts.size() != 3) {
    throw ParseError("forbidden cycle '" + std::string(word) + "' does not name exactly three atoms");
  }
  return {parts[0], parts[1], parts[2]};
}

}  // namespace

AlgebraSpec parse_algebra_text(std::string_view text) {
  std::map<std::string, std::string, std::less<>> sections;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const auto chunk = trim(text.substr(start, end - start));
    start = end + 1;
    if (chunk.empty()) continue;
    const auto colon = chunk.find(':');
    if (colon == std::string_view::npos) throw ParseError("section without ':' in '" + std::string(chunk) + "'");
    const auto key = std::string(trim(chunk.substr(0, colon)));
    if (sections.contains(key)) throw ParseError("duplicate section '" + key + "'");
    sections[key] = std::string(trim(chunk.substr(colon + 1)));
  }
  for (const auto& [key, value] : sections) {
    if (key != "name" && key != "atoms" && key != "conv" && key != "forbid") {
      throw ParseError("unknown section '" + key + "'");
    }
  }
  if (!sections.contains("atoms")) throw ParseError("missing 'atoms' section");

  const auto names = split_ws(sections["atoms"]);
  if (names.empty()) throw ParseError("no atoms listed");
  const auto index_of = [&](std::string_view n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw ParseError("unknown atom '" + std::string(n) + "'");
    return static_cast<int>(it - names.begin());
  };

  std::vector<int> conv(names.size(), -1);
  for (const auto& entry : split_ws(sections["conv"])) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw ParseError("bad converse entry '" + entry + "'");
    const int lhs = index_of(entry.substr(0, eq));
    const int rhs = index_of(entry.substr(eq + 1));
    if (conv[static_cast<std::size_t>(lhs)] >= 0 && conv[static_cast<std::size_t>(lhs)] != rhs) {
      throw ParseError("conflicting converse for '" + names[static_cast<std::size_t>(lhs)] + "'");
    }
    conv[static_cast<std::size_t>(lhs)] = rhs;
    if (conv[static_cast<std::size_t>(rhs)] < 0) conv[static_cast<std::size_t>(rhs)] = lhs;
  }

  std::vector<AtomSig> atoms;
  for (std::size_t i = 0; i < names.size(); ++i) {
    atoms.push_back({names[i], conv[i] < 0 ? static_cast<int>(i) : conv[i]});
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto c = static_cast<std::size_t>(atoms[i].converse);
    if (atoms[c].converse != static_cast<int>(i)) {
      throw ParseError("converse of '" + names[i] + "' is not involutive");
    }
  }

  TripleSet generators;
  for (const auto& word : split_ws(sections["forbid"])) generators.insert(split_triple(word, names));

  return {sections.contains("name") ? sections["name"] : std::string{}, atoms,
          peircean_closure(generators, atoms)};
}

TripleSet orbit_representatives(const AlgebraSpec& spec) {
  TripleSet reps;
  for (const auto& t : spec.forbidden()) {
    const auto readings = peircean_readings(t, spec.atoms());
    reps.insert(*std::min_element(readings.begin(), readings.end()));
  }
  return reps;
}

std::string to_text(const AlgebraSpec& spec) {
  std::ostringstream os;
  if (!spec.name().empty()) os << "name: " << spec.name() << "; ";
  os << "atoms:";
  for (const auto& a : spec.atoms()) os << ' ' << a.name;
  os << "; conv:";
  for (int i = 0; i < spec.atom_count(); ++i) {
    if (spec.converse(i) >= i) os << ' ' << spec.atom_name(i) << '=' << spec.atom_name(spec.converse(i));
  }
  os << "; forbid:";
  for (const auto& t : orbit_representatives(spec)) {
    os << ' ' << spec.atom_name(t.x) << spec.atom_name(t.y) << spec.atom_name(t.z);
  }
  return os.str();
}

AlgebraSpec algebra_from_json(const nlohmann::json& j) {
  try {
    const auto names = j.at("atoms").get<std::vector<std::string>>();
    const auto conv = j.at("converse").get<std::vector<int>>();
    if (names.size() != conv.size()) throw ParseError("'atoms' and 'converse' differ in length");
    std::vector<AtomSig> atoms;
    for (std::size_t i = 0; i < names.size(); ++i) atoms.push_back({names[i], conv[i]});
    TripleSet forbidden;
    for (const auto& t : j.at("forbidden")) {
      const auto v = t.get<std::vector<int>>();
      if (v.size() != 3) throw ParseError("forbidden entries must be index triples");
      forbidden.insert({v[0], v[1], v[2]});
    }
    return {j.value("name", std::string{}), std::move(atoms), std::move(forbidden)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad algebra JSON: ") + e.what());
  }
}

nlohmann::json to_json(const AlgebraSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name();
  auto& atoms = j["atoms"] = nlohmann::json::array();
  auto& conv = j["converse"] = nlohmann::json::array();
  for (const auto& a : spec.atoms()) {
    atoms.push_back(a.name);
    conv.push_back(a.converse);
  }
  auto& forbidden = j["forbidden"] = nlohmann::json::array();
  for (const auto& t : spec.forbidden()) forbidden.push_back({t.x, t.y, t.z});
  return j;
}

AlgebraSpec parse_algebra(std::string_view text) {
  const auto body = trim(text);
  if (body.starts_with('{')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return algebra_from_json(j);
  }
  return parse_algebra_text(body);
}

}  // namespace relalg
