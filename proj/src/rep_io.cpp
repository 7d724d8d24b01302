#include "relalg/rep_io.hpp"

#include <fstream>
#include <sstream>

namespace relalg {

std::string json_atom_key(const AlgebraSpec& spec, int atom) {
  const auto& name = spec.atom_name(atom);
  const int c = spec.converse(atom);
  if (c != atom && name == spec.atom_name(c) + "'") return spec.atom_name(c) + "_conv";
  return name;
}

namespace {

std::uint64_t get_u64(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParseError(std::string("'") + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad representation JSON: ") + e.what());
  }
}

}  // namespace

LabelingRep labeling_from_json(const nlohmann::json& j, const AlgebraSpec& spec) {
  return guarded([&] {
    const auto n = get_u64(j, "modulus");
    if (n < 1 || n > (std::uint64_t{1} << 26)) throw ParseError("modulus out of range");
    LabelingRep rep{n, std::vector<int>(static_cast<std::size_t>(n), -1)};
    for (const auto& [key, elems] : j.at("atoms").items()) {
      const auto atom = spec.find_atom(key);
      if (!atom) throw ParseError("unknown atom '" + key + "' for " + spec.name());
      for (const auto& e : elems) {
        const auto x = e.get<std::int64_t>();
        if (x <= 0 || static_cast<std::uint64_t>(x) >= n) {
          throw ParseError("element " + std::to_string(x) + " not a nonzero residue mod " + std::to_string(n));
        }
        auto& slot = rep.label[static_cast<std::size_t>(x)];
        if (slot >= 0) throw ParseError("element " + std::to_string(x) + " labeled twice");
        slot = *atom;
      }
    }
    for (std::uint64_t x = 1; x < n; ++x) {
      if (rep.label[static_cast<std::size_t>(x)] < 0) {
        throw PartialLabeling("residue " + std::to_string(x) + " is unlabeled");
      }
    }
    return rep;
  });
}

GroupingRep grouping_from_json(const nlohmann::json& j, const AlgebraSpec& spec) {
  return guarded([&] {
    const auto p = get_u64(j, "p");
    const auto m = get_u64(j, "m");
    std::shared_ptr<const CosetPartition> part;
    try {
      if (j.contains("g")) {
        part = std::make_shared<const CosetPartition>(p, static_cast<int>(m), get_u64(j, "g"));
      } else {
        part = std::make_shared<const CosetPartition>(p, static_cast<int>(m));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    GroupingRep rep{part, std::vector<int>(static_cast<std::size_t>(m), -1)};
    for (const auto& [key, cosets] : j.at("groups").items()) {
      const auto atom = spec.find_atom(key);
      if (!atom) throw ParseError("unknown atom '" + key + "' for " + spec.name());
      for (const auto& e : cosets) {
        const auto i = e.get<std::int64_t>();
        if (i < 0 || static_cast<std::uint64_t>(i) >= m) throw ParseError("coset index " + std::to_string(i) + " out of range");
        auto& slot = rep.group[static_cast<std::size_t>(i)];
        if (slot >= 0) throw ParseError("coset " + std::to_string(i) + " assigned twice");
        slot = *atom;
      }
    }
    for (std::size_t i = 0; i < rep.group.size(); ++i) {
      if (rep.group[i] < 0) throw PartialLabeling("coset " + std::to_string(i) + " is unassigned");
    }
    return rep;
  });
}

PointLabeling points_from_json(const nlohmann::json& j, const AlgebraSpec& spec) {
  return guarded([&] {
    const auto n = static_cast<int>(get_u64(j, "points"));
    const auto names = j.at("atoms").get<std::vector<std::string>>();
    std::vector<int> remap;
    for (const auto& name : names) {
      const auto atom = spec.find_atom(name);
      if (!atom) throw ParseError("unknown atom '" + name + "' for " + spec.name());
      remap.push_back(*atom);
    }
    const auto& rows = j.at("labels");
    if (rows.size() != static_cast<std::size_t>(n)) throw ParseError("'labels' must have one row per point");
    PointLabeling rep{n, std::vector<int>(static_cast<std::size_t>(n * n), -1)};
    for (int i = 0; i < n; ++i) {
      const auto row = rows.at(static_cast<std::size_t>(i)).get<std::vector<int>>();
      if (row.size() != static_cast<std::size_t>(n)) throw ParseError("'labels' rows must have n entries");
      for (int c = 0; c < n; ++c) {
        if (c == i) continue;
        const int v = row[static_cast<std::size_t>(c)];
        if (v < 0 || static_cast<std::size_t>(v) >= remap.size()) {
          throw PartialLabeling("edge (" + std::to_string(i) + "," + std::to_string(c) + ") is unlabeled");
        }
        rep.label[static_cast<std::size_t>(i * n + c)] = remap[static_cast<std::size_t>(v)];
      }
    }
    return rep;
  });
}

nlohmann::json to_json(const LabelingRep& rep, const AlgebraSpec& spec) {
  nlohmann::json atoms = nlohmann::json::object();
  for (int c = 0; c < spec.atom_count(); ++c) atoms[json_atom_key(spec, c)] = nlohmann::json::array();
  for (std::uint64_t x = 1; x < rep.n; ++x) atoms[json_atom_key(spec, rep.at(x))].push_back(x);
  return {{"modulus", rep.n}, {"atoms", atoms}};
}

nlohmann::json to_json(const GroupingRep& rep, const AlgebraSpec& spec) {
  nlohmann::json groups = nlohmann::json::object();
  for (int c = 0; c < spec.atom_count(); ++c) groups[json_atom_key(spec, c)] = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.group.size(); ++i) groups[json_atom_key(spec, rep.group[i])].push_back(i);
  return {{"p", rep.part->p()}, {"m", rep.part->m()}, {"groups", groups}};
}

nlohmann::json to_json(const PointLabeling& rep, const AlgebraSpec& spec) {
  nlohmann::json names = nlohmann::json::array();
  for (int c = 0; c < spec.atom_count(); ++c) names.push_back(json_atom_key(spec, c));
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < rep.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < rep.n; ++c) row.push_back(i == c ? -1 : rep.at(i, c));
    rows.push_back(row);
  }
  return {{"points", rep.n}, {"atoms", names}, {"labels", rows}};
}

AnyRep representation_from_json(const nlohmann::json& j, const AlgebraSpec& spec) {
  if (!j.is_object()) throw ParseError("representation must be a JSON object");
  if (j.contains("modulus")) return labeling_from_json(j, spec);
  if (j.contains("groups")) return grouping_from_json(j, spec);
  if (j.contains("points")) return points_from_json(j, spec);
  throw ParseError("cannot tell representation kind: expected 'modulus', 'groups' or 'points'");
}

VerifyReport verify(const AlgebraSpec& spec, const AnyRep& rep) {
  return std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, LabelingRep>) {
          return verify_labeling(spec, r);
        } else if constexpr (std::is_same_v<T, GroupingRep>) {
          return verify_grouping(spec, r);
        } else {
          return verify_points(spec, r);
        }
      },
      rep);
}

namespace {

bool scalar_array(const nlohmann::json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void dump_into(std::ostringstream& os, const nlohmann::json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << nlohmann::json(key).dump() << ": ";
      dump_into(os, value, indent, depth + 1);
    }
    os << '\n' << close_pad << '}';
  } else if (j.is_array() && !j.empty() && !scalar_array(j)) {
    os << "[\n";
    bool first = true;
    for (const auto& value : j) {
      if (!first) os << ",\n";
      first = false;
      os << pad;
      dump_into(os, value, indent, depth + 1);
    }
    os << '\n' << close_pad << ']';
  } else {
    os << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
  }
}

}  // namespace

std::string dump_compact(const nlohmann::json& j, int indent) {
  std::ostringstream os;
  dump_into(os, j, indent, 0);
  os << '\n';
  // json::dump separates array items with ',' only; add a space for readability.
  std::string s = os.str();
  std::string out;
  out.reserve(s.size() + s.size() / 4);
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '"' && (i == 0 || s[i - 1] != '\\')) in_string = !in_string;
    out += ch;
    if (!in_string && ch == ',' && i + 1 < s.size() && s[i + 1] != '\n') out += ' ';
  }
  return out;
}

nlohmann::json read_json_file(const std::string& path) {
  const auto text = read_text_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": malformed JSON: " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace relalg
