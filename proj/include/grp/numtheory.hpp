#ifndef GRP_NUMTHEORY_HPP
#define GRP_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace grp::num {

using u128 = unsigned __int128;
using u64 = std::uint64_t;

/// Primality test: deterministic Miller-Rabin below 2^64; above that the
/// fixed base set has no known composite, and all shipped scans stay within
/// the 64-bit range anyway.
bool is_prime(u128 n);

/// Complete factorization (trial division plus Pollard rho), prime-ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

struct PrimePowerFact {
  u128 n = 0;
  bool verdict = false;
  u128 base = 0;        // prime, when verdict holds
  unsigned exponent = 0;
};

/// n = p^k for a prime p and k >= 1; n = 1 is false by convention.
PrimePowerFact is_prime_power(u128 n);

/// Primes dividing q^n - 1 but no q^i - 1 for 1 <= i < n. Requires q >= 2,
/// n >= 3 and q^n - 1 within 64 bits. Empty exactly for (2, 6) in the
/// Zsigmondy range.
std::vector<u64> primitive_prime_divisors(u64 q, unsigned n);

enum class Lemma3Part { a, b };

/// part a: { t <= t_max : 2^t - 1 and 2^(t-1) - 1 both prime powers };
/// part b: the analogue with +1 and t+1. Scans t from 0; t_max is capped at
/// 100 to keep every value within 128 bits.
std::set<unsigned> lemma3_scan(Lemma3Part part, unsigned t_max);

}  // namespace grp::num

#endif  // GRP_NUMTHEORY_HPP
