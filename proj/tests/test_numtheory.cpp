#include <doctest.h>

#include <set>

#include "grp/numtheory.hpp"

using namespace grp::num;

TEST_CASE("prime powers") {
  CHECK(!is_prime_power(1).verdict);
  CHECK(!is_prime_power(63).verdict);  // 9 * 7

  PrimePowerFact nine = is_prime_power(9);
  CHECK(nine.verdict);
  CHECK(nine.base == 3);
  CHECK(nine.exponent == 2);

  PrimePowerFact seventeen = is_prime_power(17);
  CHECK(seventeen.verdict);
  CHECK(seventeen.base == 17);
  CHECK(seventeen.exponent == 1);

  CHECK(is_prime_power(1024).verdict);
  CHECK(!is_prime_power(0).verdict);
  CHECK(!is_prime_power(2 * 3 * 5 * 7).verdict);

  // A Mersenne prime beyond 64 bits exercises the wide path.
  u128 m89 = (u128{1} << 89) - 1;
  PrimePowerFact wide = is_prime_power(m89);
  CHECK(wide.verdict);
  CHECK(wide.exponent == 1);
}

TEST_CASE("primality spot checks") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(is_prime(2147483647ull));          // 2^31 - 1
  CHECK(!is_prime(2147483647ull * 97));
  CHECK(is_prime((u128{1} << 61) - 1));    // 2^61 - 1
  CHECK(!is_prime((u128{1} << 67) - 1));   // 193707721 * 761838257287
}

TEST_CASE("factorization recombines") {
  for (u64 n : {2ull, 12ull, 97ull, 1024ull, 600851475143ull, 87178291199ull}) {
    u64 back = 1;
    for (auto [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      for (unsigned i = 0; i < e; ++i) back *= p;
    }
    CHECK(back == n);
  }
}

TEST_CASE("primitive prime divisors") {
  CHECK(primitive_prime_divisors(2, 6).empty());
  CHECK(primitive_prime_divisors(2, 4) == std::vector<u64>{5});
  CHECK(primitive_prime_divisors(3, 4) == std::vector<u64>{5});

  SUBCASE("Zsigmondy grid") {
    for (u64 q = 2; q <= 10; ++q)
      for (unsigned n = 3; n <= 12; ++n) {
        auto divisors = primitive_prime_divisors(q, n);
        if (q == 2 && n == 6)
          CHECK(divisors.empty());
        else
          CHECK(!divisors.empty());
        for (u64 r : divisors) CHECK(r % n == 1);
      }
  }
}

TEST_CASE("prime-power dichotomy scans") {
  CHECK(lemma3_scan(Lemma3Part::a, 60) == std::set<unsigned>{3});
  CHECK(lemma3_scan(Lemma3Part::b, 60) == std::set<unsigned>{0, 1, 2, 3});
  CHECK(lemma3_scan(Lemma3Part::a, 4) == std::set<unsigned>{3});
  // The full 128-bit range stays stable.
  CHECK(lemma3_scan(Lemma3Part::a, 100) == std::set<unsigned>{3});
  CHECK(lemma3_scan(Lemma3Part::b, 100) == std::set<unsigned>{0, 1, 2, 3});
}
