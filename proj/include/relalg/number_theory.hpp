#pragma once

#include <cstdint>
#include <vector>

namespace relalg::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Deterministic Miller-Rabin. The first twelve prime bases are a witness
/// set for every n < 2^64, so the answer is exact over the whole domain.
bool is_prime(std::uint64_t n);

/// Distinct prime factors in ascending order, by trial division.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// Smallest primitive root modulo the prime p.
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// All primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

}  // namespace relalg::nt
