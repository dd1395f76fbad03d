#include "grp/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "grp/errors.hpp"

namespace grp::num {

namespace {

u128 mul_mod(u128 a, u128 b, u128 m) {
  if (m <= 0xffffffffffffffffULL) return (a % m) * (b % m) % m;
  // Schoolbook double-and-add for 128-bit moduli.
  u128 result = 0;
  a %= m;
  while (b) {
    if (b & 1) {
      result += a;
      if (result >= m) result -= m;
    }
    a <<= 1;
    if (a >= m) a -= m;
    b >>= 1;
  }
  return result;
}

u128 pow_mod(u128 base, u128 exp, u128 m) {
  u128 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin(u128 n, u128 a) {
  if (a % n == 0) return true;
  u128 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  u128 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Deterministic witness set below 2^64; reused (with a few extras) above.
constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                          41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = static_cast<u64>((mul_mod(x, x, n) + c) % n);
      y = static_cast<u64>((mul_mod(y, y, n) + c) % n);
      y = static_cast<u64>((mul_mod(y, y, n) + c) % n);
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

// Largest k with root^k = n for some integer root, together with that root.
std::pair<u128, unsigned> perfect_power_core(u128 n) {
  for (unsigned k = 127; k >= 2; --k) {
    // Integer k-th root by binary search.
    u128 lo = 1, hi = u128{1} << (127 / k + 1);
    while (lo < hi) {
      u128 mid = lo + (hi - lo + 1) / 2;
      u128 acc = 1;
      bool overflow = false;
      for (unsigned i = 0; i < k; ++i) {
        if (acc > n / mid) {
          overflow = true;
          break;
        }
        acc *= mid;
      }
      if (!overflow && acc <= n)
        lo = mid;
      else
        hi = mid - 1;
    }
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= lo;
    if (acc == n && lo >= 2) return {lo, k};
  }
  return {n, 1};
}

}  // namespace

bool is_prime(u128 n) {
  if (n < 2) return false;
  for (u64 p : kBases)
    if (n % p == 0) return n == p;
  for (u64 a : kBases)
    if (!miller_rabin(n, a)) return false;
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<u64> primes;
  std::vector<u64> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    u64 m = stack.back();
    stack.pop_back();
    if (is_prime(m)) {
      primes.push_back(m);
      continue;
    }
    // Strip small factors first; Pollard rho handles the rest.
    bool split = false;
    for (u64 d = 2; d < 100000 && d * d <= m; ++d)
      if (m % d == 0) {
        stack.push_back(d);
        stack.push_back(m / d);
        split = true;
        break;
      }
    if (!split) {
      u64 d = pollard_rho(m);
      stack.push_back(d);
      stack.push_back(m / d);
    }
  }
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

PrimePowerFact is_prime_power(u128 n) {
  PrimePowerFact fact;
  fact.n = n;
  if (n < 2) return fact;
  auto [core, exponent] = perfect_power_core(n);
  if (is_prime(core)) {
    fact.verdict = true;
    fact.base = core;
    fact.exponent = exponent;
  }
  return fact;
}

std::vector<u64> primitive_prime_divisors(u64 q, unsigned n) {
  if (q < 2 || n < 3) throw Error("primitive prime divisors need q >= 2, n >= 3");
  u128 power = 1;
  for (unsigned i = 0; i < n; ++i) {
    power *= q;
    if (power > (u128{1} << 64)) throw CapExceeded("q^n exceeds 64 bits");
  }
  u64 value = static_cast<u64>(power - 1);
  std::vector<u64> out;
  for (auto [p, exp] : factorize(value)) {
    bool primitive = true;
    u64 partial = 1;
    for (unsigned i = 1; i < n && primitive; ++i) {
      partial *= q;
      if ((partial - 1) % p == 0) primitive = false;
    }
    if (primitive) out.push_back(p);
  }
  return out;
}

std::set<unsigned> lemma3_scan(Lemma3Part part, unsigned t_max) {
  t_max = std::min(t_max, 100u);
  std::set<unsigned> out;
  for (unsigned t = 0; t <= t_max; ++t) {
    bool both;
    if (part == Lemma3Part::a) {
      if (t == 0) continue;  // 2^0 - 1 = 0 is not a prime power
      u128 first = (u128{1} << t) - 1;
      u128 second = (u128{1} << (t - 1)) - 1;
      both = is_prime_power(first).verdict && is_prime_power(second).verdict;
    } else {
      u128 first = (u128{1} << t) + 1;
      u128 second = (u128{1} << (t + 1)) + 1;
      both = is_prime_power(first).verdict && is_prime_power(second).verdict;
    }
    if (both) out.insert(t);
  }
  return out;
}

}  // namespace grp::num
