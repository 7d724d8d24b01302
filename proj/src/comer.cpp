#include "relalg/comer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "relalg/number_theory.hpp"

namespace relalg {

CosetPartition::CosetPartition(std::uint64_t p, int m) : CosetPartition(p, m, 0) {}

CosetPartition::CosetPartition(std::uint64_t p, int m, std::uint64_t g) : p_(p), m_(m), g_(g) {
  if (!nt::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p > kMaxModulus) throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds table limit");
  if (m < 1) throw std::invalid_argument("coset count must be positive");
  if ((p - 1) % static_cast<std::uint64_t>(m) != 0) {
    throw std::invalid_argument(std::to_string(m) + " does not divide p-1 = " + std::to_string(p - 1));
  }
  if (g_ == 0) {
    g_ = nt::smallest_primitive_root(p);
  } else {
    for (auto q : nt::distinct_prime_factors(p - 1)) {
      if (nt::powmod(g_, (p - 1) / q, p) == 1) {
        throw std::invalid_argument(std::to_string(g_) + " is not a primitive root mod " + std::to_string(p));
      }
    }
  }
  build();
}

void CosetPartition::build() {
  const auto size = coset_size();
  index_.assign(static_cast<std::size_t>(p_), -1);
  members_.assign(static_cast<std::size_t>(p_ - 1), 0);
  std::uint64_t x = 1;
  for (std::uint64_t t = 0; t + 1 < p_; ++t) {
    const auto i = static_cast<std::int32_t>(t % static_cast<std::uint64_t>(m_));
    index_[static_cast<std::size_t>(x)] = i;
    members_[static_cast<std::size_t>(static_cast<std::uint64_t>(i) * size + t / static_cast<std::uint64_t>(m_))] =
        static_cast<std::uint32_t>(x);
    x = x * g_ % p_;
  }
}

std::span<const std::uint32_t> CosetPartition::elements(int i) const {
  if (i < 0 || i >= m_) throw std::out_of_range("coset index " + std::to_string(i) + " out of range");
  const auto size = static_cast<std::size_t>(coset_size());
  return {members_.data() + static_cast<std::size_t>(i) * size, size};
}

int CosetPartition::converse_index(int i) const {
  if (i < 0 || i >= m_) throw std::out_of_range("coset index " + std::to_string(i) + " out of range");
  return coset_of(p_ - generator_power(static_cast<std::uint64_t>(i)));
}

std::uint64_t CosetPartition::generator_power(std::uint64_t e) const { return nt::powmod(g_, e, p_); }

CycleTable::CycleTable(int m, std::vector<std::uint8_t> cells) : m_(m), cells_(std::move(cells)) {
  if (cells_.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) {
    throw std::invalid_argument("cycle table needs m*m cells");
  }
}

TripleSet CycleTable::forbidden_triples() const {
  TripleSet out;
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y)
      for (int z = 0; z < m_; ++z)
        if (!contains(y, z, x)) out.insert(out.end(), {x, y, z});
  return out;
}

std::string CycleTable::to_csv() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(m_) * static_cast<std::size_t>(2 * m_));
  for (int d = 0; d < m_; ++d) {
    for (int e = 0; e < m_; ++e) {
      if (e > 0) out += ',';
      out += at(d, e) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

CycleTable cycle_table(const CosetPartition& part) {
  const int m = part.m();
  const auto p = part.p();
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  const auto h = part.elements(0);
  for (int e = 0; e < m; ++e) {
    const auto rep = part.generator_power(static_cast<std::uint64_t>(e));
    int remaining = m;
    for (auto a : h) {
      const auto u = (rep + p - a) % p;
      if (u == 0) continue;  // 0 is never in a coset
      auto& cell = cells[static_cast<std::size_t>(part.coset_of(u) * m + e)];
      if (cell == 0) {
        cell = 1;
        if (--remaining == 0) break;  // every row already has a witness
      }
    }
  }
  return {m, std::move(cells)};
}

SumsetCube sumset_cube_oracle(const CosetPartition& part) {
  const auto p = part.p();
  if (p > kOracleLimit) {
    throw std::invalid_argument("oracle limited to p <= " + std::to_string(kOracleLimit));
  }
  const int m = part.m();
  SumsetCube cube{m, std::vector<std::uint8_t>(static_cast<std::size_t>(m) * m * m, 0)};
  std::vector<std::uint8_t> sum(static_cast<std::size_t>(p));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::fill(sum.begin(), sum.end(), 0);
      for (auto u : part.elements(i))
        for (auto v : part.elements(j)) sum[(u + v) % p] = 1;
      for (int k = 0; k < m; ++k) {
        bool all = true;
        for (auto w : part.elements(k)) {
          if (!sum[w]) {
            all = false;
            break;
          }
        }
        cube.cells[(static_cast<std::size_t>(i) * m + j) * m + k] = all ? 1 : 0;
      }
    }
  }
  return cube;
}

CycleTable cycle_table_oracle(const CosetPartition& part) {
  const auto cube = sumset_cube_oracle(part);
  const int m = part.m();
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(m) * m);
  for (int d = 0; d < m; ++d)
    for (int e = 0; e < m; ++e) cells[static_cast<std::size_t>(d * m + e)] = cube.contains(0, d, e) ? 1 : 0;
  return {m, std::move(cells)};
}

std::string to_string(Pattern p) {
  switch (p) {
    case Pattern::Color: return "color";
    case Pattern::SplitSym: return "split-sym";
    case Pattern::SplitAsym: return "split-asym";
    case Pattern::Other: return "other";
  }
  return "other";
}

namespace {

TripleSet pair_class_triples(const std::vector<int>& partner) {
  TripleSet out;
  for (std::size_t i = 0; i < partner.size(); ++i) {
    const int cls[2] = {static_cast<int>(i), partner[i]};
    for (int x : cls)
      for (int y : cls)
        for (int z : cls) out.insert({x, y, z});
  }
  return out;
}

std::vector<Triple> symmetric_difference(const TripleSet& a, const TripleSet& b) {
  std::vector<Triple> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Candidate partner for each coset: the unique j != i with (i, i, j) forbidden.
std::optional<std::vector<int>> symmetric_pairing(int m, const TripleSet& forbidden) {
  if (m % 2 != 0) return std::nullopt;
  std::vector<int> partner(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j == i || !forbidden.contains({i, i, j})) continue;
      if (partner[static_cast<std::size_t>(i)] >= 0) return std::nullopt;
      partner[static_cast<std::size_t>(i)] = j;
    }
    if (partner[static_cast<std::size_t>(i)] < 0) return std::nullopt;
  }
  for (int i = 0; i < m; ++i) {
    if (partner[static_cast<std::size_t>(partner[static_cast<std::size_t>(i)])] != i) return std::nullopt;
  }
  return partner;
}

}  // namespace

Classification classify(const CosetPartition& part, const CycleTable& table) {
  Classification c;
  c.p = part.p();
  c.m = part.m();
  c.g = part.g();
  c.symmetric = part.is_symmetric();
  const int m = part.m();
  const auto forbidden = table.forbidden_triples();

  TripleSet expected;
  Pattern candidate = Pattern::Other;
  std::vector<int> pairing;
  if (c.symmetric) {
    TripleSet one_cycles;
    for (int i = 0; i < m; ++i) one_cycles.insert({i, i, i});
    expected = one_cycles;
    candidate = Pattern::Color;
    if (auto pi = symmetric_pairing(m, forbidden)) {
      auto split = pair_class_triples(*pi);
      if (symmetric_difference(forbidden, split).size() < symmetric_difference(forbidden, expected).size()) {
        expected = std::move(split);
        candidate = Pattern::SplitSym;
        pairing = std::move(*pi);
      }
    }
  } else {
    pairing.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pairing[static_cast<std::size_t>(i)] = part.converse_index(i);
    expected = pair_class_triples(pairing);
    candidate = Pattern::SplitAsym;
  }

  auto diff = symmetric_difference(forbidden, expected);
  c.deviation_count = diff.size();
  if (diff.empty()) {
    c.pattern = candidate;
    c.colors = candidate == Pattern::Color ? m : m / 2;
    c.pairing = std::move(pairing);
  } else {
    c.pattern = Pattern::Other;
    if (diff.size() > kDeviationCap) diff.resize(kDeviationCap);
    c.deviations = std::move(diff);
  }
  return c;
}

Classification classify(const CosetPartition& part) { return classify(part, cycle_table(part)); }

nlohmann::json to_json(const Classification& c) {
  nlohmann::json j;
  j["p"] = c.p;
  j["m"] = c.m;
  j["g"] = c.g;
  j["symmetric"] = c.symmetric;
  j["pattern"] = to_string(c.pattern);
  j["colors"] = c.colors;
  auto& dev = j["deviations"] = nlohmann::json::array();
  for (const auto& t : c.deviations) dev.push_back({t.x, t.y, t.z});
  j["deviation_count"] = c.deviation_count;
  j["pairing"] = c.pairing;
  return j;
}

std::string to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::Color: return "color";
    case ScanMode::SplitSym: return "split-sym";
    case ScanMode::SplitAsym: return "split-asym";
  }
  return "color";
}

ScanMode scan_mode_from_string(std::string_view s) {
  if (s == "color") return ScanMode::Color;
  if (s == "split-sym") return ScanMode::SplitSym;
  if (s == "split-asym") return ScanMode::SplitAsym;
  throw std::invalid_argument("unknown scan mode '" + std::string(s) + "'");
}

int scan_modulus(const ScanOptions& opts) {
  return opts.mode == ScanMode::Color ? opts.colors : 2 * opts.colors;
}

std::vector<std::uint64_t> scan(const ScanOptions& opts) {
  if (opts.colors < 1) throw std::invalid_argument("colors must be >= 1");
  std::uint64_t max_p = 0;
  if (opts.max_p) {
    max_p = *opts.max_p;
  } else if (opts.mode == ScanMode::Color) {
    const auto k = static_cast<std::uint64_t>(opts.colors);
    max_p = k * k * k * k + 5;
  } else {
    throw std::invalid_argument("max_p is required outside color mode");
  }
  max_p = std::min(max_p, CosetPartition::kMaxModulus);

  const auto m = static_cast<std::uint64_t>(scan_modulus(opts));
  const Pattern target = opts.mode == ScanMode::Color      ? Pattern::Color
                         : opts.mode == ScanMode::SplitSym ? Pattern::SplitSym
                                                           : Pattern::SplitAsym;
  const bool want_even = opts.mode != ScanMode::SplitAsym;

  std::vector<std::uint64_t> candidates;
  for (std::uint64_t p = m + 1; p <= max_p; p += m) {
    if (((p - 1) / m % 2 == 0) != want_even) continue;
    if (nt::is_prime(p)) candidates.push_back(p);
  }

  const auto matches = [&](std::uint64_t p) {
    return classify(CosetPartition(p, static_cast<int>(m))).pattern == target;
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(opts.workers, static_cast<unsigned>(candidates.size())));
  std::vector<std::uint8_t> hit(candidates.size(), 0);
  if (workers <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) hit[i] = matches(candidates[i]);
  } else {
    // Strided split; each worker writes only its own slots.
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < candidates.size(); i += workers) hit[i] = matches(candidates[i]);
      });
    }
  }

  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (hit[i]) out.push_back(candidates[i]);
  return out;
}

}  // namespace relalg
