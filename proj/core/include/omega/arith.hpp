// Exact integer number theory used throughout the library: factorization,
// pi-parts, cyclotomic values and primitive prime divisors.

#ifndef OMEGA_ARITH_HPP_
#define OMEGA_ARITH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace omega {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

/// Largest value accepted by factorize() and reported by Factored::value().
inline constexpr u64 kMaxFactorable = static_cast<u64>(INT64_MAX);

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer held by its prime factorization.
///
/// Products may grow past 2^63 - 1 (orders of exceptional groups do); the
/// factorization stays exact and value() reports std::nullopt in that case.
class Factored {
public:
  Factored() = default;  // the integer 1

  /// Builds from (prime, exponent) pairs in any order; merges repeated primes.
  /// Throws std::invalid_argument on a non-prime base or a zero exponent.
  static Factored from_factors(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const& { return factors_; }
  std::vector<PrimePower> factors() && { return std::move(factors_); }

  /// The integer itself, or nullopt when it exceeds 2^63 - 1.
  std::optional<u64> value() const;
  bool too_large() const { return !value().has_value(); }

  std::vector<u64> primes() const;
  unsigned exponent_of(u64 prime) const;

  bool is_one() const { return factors_.empty(); }
  bool divides(const Factored& other) const;  // *this | other
  bool is_divisible_by(u64 m) const;

  Factored& operator*=(const Factored& other);
  friend Factored operator*(Factored a, const Factored& b) { return a *= b; }

  /// Exact quotient; throws std::domain_error unless divisor | *this.
  Factored divided_by(const Factored& divisor) const;

  /// "2^7 * 3^4 * 5", or "1".
  std::string to_string() const;

  friend bool operator==(const Factored&, const Factored&) = default;

private:
  std::vector<PrimePower> factors_;  // primes strictly increasing
};

/// Canonical factorization of 1 <= n <= 2^63 - 1.
Factored factorize(u64 n);

/// Deterministic primality for 64-bit integers.
bool is_prime(u64 n);

/// Strong probable-prime test (Miller-Rabin, fixed bases) for n < 2^127.
/// Exact below 3.3e24.
bool is_probable_prime(u128 n);

/// Smallest prime factor of 1 < n < 2^127.
u128 smallest_prime_factor(u128 n);

/// If n == p^k for a prime p, returns (p, k).
std::optional<std::pair<u64, unsigned>> prime_power_decomposition(u64 n);

u64 gcd(u64 a, u64 b);
u128 gcd(u128 a, u128 b);

/// lcm; throws std::overflow_error past 2^64 - 1.
u64 lcm(u64 a, u64 b);

/// base^exp; throws std::overflow_error past 2^64 - 1.
u64 checked_pow(u64 base, unsigned exp);
u64 checked_mul(u64 a, u64 b);

u64 pow_mod(u64 base, u64 exp, u64 mod);
u128 pow_mod_u128(u128 base, u128 exp, u128 mod);

struct RPart {
  u64 r_part = 1;        // largest divisor of n with all primes in pi(r)
  u64 r_prime_part = 1;  // n / r_part

  friend bool operator==(const RPart&, const RPart&) = default;
};

/// Splits n into its pi(r)-part and the complementary part. n, r >= 1.
RPart r_part(u64 n, u64 r);

/// Value of the n-th cyclotomic polynomial at q, or nullopt if it does not
/// fit in 127 bits. n >= 1, q >= 2.
std::optional<u128> cyclotomic_value(unsigned n, u64 q);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<i64> cyclotomic_polynomial(unsigned n);

/// Smallest prime r with r | q^n - 1 and r not dividing q^i - 1 for i < n.
/// Returns nullopt exactly for (q, n) = (2, 6).
/// Requires q >= 2 and n >= 3; throws std::invalid_argument otherwise and
/// std::overflow_error when Phi_n(q) exceeds 127 bits.
std::optional<u128> zsigmondy(u64 q, unsigned n);

/// The multiplicative order of q modulo a prime r not dividing q.
u64 multiplicative_order(u64 q, u64 r);

std::string to_string(u128 v);
/// Parses a non-negative decimal integer up to 2^128 - 1.
u128 parse_u128(const std::string& text);

// ---------------------------------------------------------------------------
// Catalogued gcd identities.

enum class GcdIdentity {
  kE6,  // ((q^5 - 1)(q + 1), q^2 - q + 1) = (q + 1, 3)
  kSp,  // (q^(n-1) - eps, p + 1) = 2 for odd q = p^k, eps = +1 iff k(n-1) odd
};

std::string to_string(GcdIdentity id);

struct GcdCheck {
  u64 q = 0;
  GcdIdentity identity = GcdIdentity::kE6;
  unsigned n = 0;   // kSp only
  int epsilon = 0;  // kSp only
  u64 lhs = 0;
  u64 rhs = 0;
  bool pass() const { return lhs == rhs; }
};

/// Evaluates the kE6 identity at q >= 2 (any integer; no overflow up to 10^6).
GcdCheck check_e6_gcd(u64 q);

/// Evaluates the kSp identity for odd prime power q and n >= 2. The sign is
/// fixed by the parity of k(n-1).
GcdCheck check_sp_gcd(unsigned n, u64 q);

/// Sign used by check_sp_gcd: +1 when k(n-1) is odd, -1 otherwise.
int sp_gcd_epsilon(unsigned n, u64 q);

/// Runs kE6 for every q in [q_lo, q_hi] and kSp for every odd prime power q in
/// the range and every 2 <= n <= n_max. Range must lie within [2, 10^6].
std::vector<GcdCheck> gcd_identity_suite(u64 q_lo, u64 q_hi, unsigned n_max = 12);

}  // namespace omega

#endif  // OMEGA_ARITH_HPP_
