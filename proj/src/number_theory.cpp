#include "relalg/number_theory.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace relalg::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % mod);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (auto b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= n / q; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto factors = distinct_prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (auto q : factors) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw std::logic_error("no primitive root found");  // unreachable for prime p
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo < 2 ? 2 : lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == UINT64_MAX) break;
  }
  return out;
}

}  // namespace relalg::nt
