#include "relalg/algebra.hpp"

#include <charconv>
#include <sstream>

namespace relalg {

AlgebraSpec::AlgebraSpec(std::string name, std::vector<AtomSig> atoms, TripleSet forbidden)
    : name_(std::move(name)), atoms_(std::move(atoms)), forbidden_(std::move(forbidden)) {
  const auto k = atoms_.size();
  table_.assign(k * k * k, false);
  for (const auto& t : forbidden_) {
    const auto in_range = [k](int v) { return v >= 0 && static_cast<std::size_t>(v) < k; };
    if (!in_range(t.x) || !in_range(t.y) || !in_range(t.z)) continue;  // reported by validate_spec
    table_[(static_cast<std::size_t>(t.x) * k + static_cast<std::size_t>(t.y)) * k +
           static_cast<std::size_t>(t.z)] = true;
  }
}

std::optional<int> AlgebraSpec::find_atom(std::string_view atom_name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].name == atom_name) return static_cast<int>(i);
  }
  constexpr std::string_view kConvSuffix = "_conv";
  if (atom_name.size() > kConvSuffix.size() && atom_name.ends_with(kConvSuffix)) {
    auto base = find_atom(atom_name.substr(0, atom_name.size() - kConvSuffix.size()));
    if (base) return atoms_[static_cast<std::size_t>(*base)].converse;
  }
  return std::nullopt;
}

int AlgebraSpec::atom_index(std::string_view atom_name) const {
  auto idx = find_atom(atom_name);
  if (!idx) throw std::invalid_argument("unknown atom '" + std::string(atom_name) + "' in " + name_);
  return *idx;
}

std::vector<Triple> peircean_readings(const Triple& t, std::span<const AtomSig> sig) {
  const auto conv = [&](int a) {
    if (a < 0 || static_cast<std::size_t>(a) >= sig.size()) {
      throw std::out_of_range("atom index " + std::to_string(a) + " out of range");
    }
    return sig[static_cast<std::size_t>(a)].converse;
  };
  const int cx = conv(t.x);
  const int cy = conv(t.y);
  const int cz = conv(t.z);
  return {
      {t.x, t.y, t.z}, {cx, cz, cy}, {t.y, t.x, cz},
      {cy, t.z, cx},   {t.z, cy, t.x}, {cz, cx, t.y},
  };
}

TripleSet peircean_closure(const TripleSet& triples, std::span<const AtomSig> sig) {
  // The six readings form a group action, so one pass per input triple is enough.
  TripleSet out;
  for (const auto& t : triples) {
    for (const auto& r : peircean_readings(t, sig)) out.insert(r);
  }
  return out;
}

NeedsTable needs_of(const AlgebraSpec& spec) {
  const int k = spec.atom_count();
  std::vector<std::vector<AtomPair>> needs(static_cast<std::size_t>(k));
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      for (int z = 0; z < k; ++z) {
        if (!spec.forbids(x, y, z)) needs[static_cast<std::size_t>(x)].emplace_back(y, z);
      }
    }
  }
  return NeedsTable(std::move(needs));
}

ValidationReport validate_spec(const AlgebraSpec& spec) {
  ValidationReport report;
  const auto fail = [&](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };
  const int k = spec.atom_count();
  const auto in_range = [k](int v) { return v >= 0 && v < k; };

  bool converse_ok = true;
  for (int i = 0; i < k; ++i) {
    const int c = spec.atoms()[static_cast<std::size_t>(i)].converse;
    if (!in_range(c)) {
      fail("atom " + spec.atom_name(i) + ": converse index " + std::to_string(c) + " out of range");
      converse_ok = false;
    } else if (spec.atoms()[static_cast<std::size_t>(c)].converse != i) {
      fail("converse not involutive: conv(conv(" + spec.atom_name(i) + ")) != " + spec.atom_name(i));
      converse_ok = false;
    }
    for (int j = 0; j < i; ++j) {
      if (spec.atom_name(i) == spec.atom_name(j)) fail("duplicate atom name " + spec.atom_name(i));
    }
  }

  bool triples_ok = true;
  for (const auto& t : spec.forbidden()) {
    if (!in_range(t.x) || !in_range(t.y) || !in_range(t.z)) {
      std::ostringstream os;
      os << "forbidden triple (" << t.x << "," << t.y << "," << t.z << ") out of range";
      fail(os.str());
      triples_ok = false;
    }
  }

  if (converse_ok && triples_ok) {
    const auto closed = peircean_closure(spec.forbidden(), spec.atoms());
    for (const auto& t : closed) {
      if (!spec.forbidden().contains(t)) {
        fail("forbidden set not Peircean-closed: missing " + spec.atom_name(t.x) + spec.atom_name(t.y) +
             spec.atom_name(t.z));
      }
    }
  }
  return report;
}

namespace {

const std::vector<AtomSig> kTwoSymOnePair = {{"a", 0}, {"b", 1}, {"r", 3}, {"r'", 2}};
const std::vector<AtomSig> kOneSymOnePair = {{"a", 0}, {"r", 2}, {"r'", 1}};

TripleSet all_triples_over(std::initializer_list<int> atoms) {
  TripleSet out;
  for (int x : atoms)
    for (int y : atoms)
      for (int z : atoms) out.insert({x, y, z});
  return out;
}

TripleSet merge(TripleSet a, const TripleSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

AlgebraSpec color_algebra(int colors) {
  std::vector<AtomSig> atoms;
  TripleSet forbidden;
  for (int i = 0; i < colors; ++i) {
    std::string name;
    if (colors <= 26) {
      name = std::string(1, static_cast<char>('a' + i));
    } else {
      name = "c" + std::to_string(i);
    }
    atoms.push_back({std::move(name), i});
    forbidden.insert({i, i, i});
  }
  return {"E(" + std::to_string(colors) + ")", std::move(atoms), std::move(forbidden)};
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"E(k)", "33_37", "1308_1316", "1311_1316", "1314_1316", "31_37", "32_65", "1306_1314"};
}

AlgebraSpec catalog_get(std::string_view name) {
  if (name.starts_with("E(") && name.ends_with(")")) {
    const auto digits = name.substr(2, name.size() - 3);
    int colors = 0;
    const auto* end = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(digits.data(), end, colors);
    if (ec != std::errc{} || ptr != end || colors < 1) {
      throw UnknownAlgebra("bad color-algebra parameter in '" + std::string(name) + "'");
    }
    return color_algebra(colors);
  }

  // a=0, b=1, r=2, r'=3 where present.
  const std::string n(name);
  if (n == "33_37") {
    return {n, kOneSymOnePair, peircean_closure({{2, 1, 1}}, kOneSymOnePair)};
  }
  if (n == "31_37") {
    return {n, kOneSymOnePair, all_triples_over({1, 2})};
  }
  if (n == "1308_1316") {
    return {n, kTwoSymOnePair, merge({{0, 0, 0}, {1, 1, 1}}, peircean_closure({{3, 2, 2}}, kTwoSymOnePair))};
  }
  if (n == "1311_1316") {
    return {n, kTwoSymOnePair, merge({{0, 0, 0}, {1, 1, 1}}, peircean_closure({{2, 2, 2}}, kTwoSymOnePair))};
  }
  if (n == "1314_1316") {
    return {n, kTwoSymOnePair, {{0, 0, 0}, {1, 1, 1}}};
  }
  if (n == "1306_1314") {
    return {n, kTwoSymOnePair, merge({{1, 1, 1}}, all_triples_over({2, 3}))};
  }
  if (n == "32_65") {
    return {n, {{"a", 0}, {"b", 1}, {"c", 2}}, {{1, 1, 1}, {2, 2, 2}}};
  }
  throw UnknownAlgebra("unknown algebra '" + n + "'");
}

}  // namespace relalg
