#include <vector>

#include <stdexcept>

#include "doctest.h"
#include "relalg/number_theory.hpp"

using namespace relalg::nt;

TEST_SUITE("number_theory") {
  TEST_CASE("is_prime agrees with a sieve below 200000") {
    constexpr std::size_t kLimit = 200000;
    std::vector<bool> composite(kLimit, false);
    composite[0] = composite[1] = true;
    for (std::size_t i = 2; i * i < kLimit; ++i)
      if (!composite[i])
        for (std::size_t j = i * i; j < kLimit; j += i) composite[j] = true;
    for (std::size_t n = 0; n < kLimit; ++n) REQUIRE_MESSAGE(is_prime(n) == !composite[n], n);
  }

  TEST_CASE("is_prime on 64-bit edge cases") {
    CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ULL));
    CHECK_FALSE(is_prime(3215031751ULL));            // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ULL));   // strong pseudoprime to bases up to 23
    CHECK(is_prime(751181));
    CHECK(is_prime(33791));
  }

  TEST_CASE("primitive roots") {
    CHECK(smallest_primitive_root(5) == 2);
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(smallest_primitive_root(71) == 7);
    CHECK_THROWS_AS(smallest_primitive_root(10), std::invalid_argument);

    // Oracle: multiplicative order by repeated multiplication.
    for (std::uint64_t p : {3ULL, 13ULL, 29ULL, 97ULL, 199ULL, 33791ULL}) {
      const auto g = smallest_primitive_root(p);
      std::uint64_t x = 1;
      std::uint64_t order = 0;
      do {
        x = x * g % p;
        ++order;
      } while (x != 1);
      CHECK(order == p - 1);
      for (std::uint64_t h = 2; h < g; ++h) {
        std::uint64_t y = 1;
        std::uint64_t ord = 0;
        do {
          y = y * h % p;
          ++ord;
        } while (y != 1);
        CHECK(ord < p - 1);
      }
    }
  }

  TEST_CASE("factorization and prime listing") {
    CHECK(distinct_prime_factors(751180) == std::vector<std::uint64_t>{2, 5, 23, 71});
    CHECK(distinct_prime_factors(1) == std::vector<std::uint64_t>{});
    CHECK(primes_between(10, 30) == std::vector<std::uint64_t>{11, 13, 17, 19, 23, 29});
  }
}
