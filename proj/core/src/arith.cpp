#include "omega/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "modarith.hpp"

namespace omega {

namespace {

constexpr u64 kSieveLimit = u64{1} << 20;

struct Sieve {
  std::vector<bool> composite;
  std::vector<u64> primes;

  Sieve() : composite(kSieveLimit + 1, false) {
    composite[0] = composite[1] = true;
    for (u64 i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (u64 j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
    }
  }
};

const Sieve& sieve() {
  static const Sieve s;
  return s;
}

constexpr u64 kBases64[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
const u128 kBases128[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                          41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

void factor_rec64(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const u64 d = detail::pollard_brent<detail::Mod64>(n);
  factor_rec64(d, out);
  factor_rec64(n / d, out);
}

void factor_rec128(u128 n, std::vector<u128>& out) {
  if (n == 1) return;
  if (n <= kMaxFactorable) {
    std::map<u64, unsigned> f;
    factor_rec64(static_cast<u64>(n), f);
    for (auto [p, e] : f) out.push_back(p);
    return;
  }
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  const u128 d = detail::pollard_brent<detail::Mont128>(n);
  factor_rec128(d, out);
  factor_rec128(n / d, out);
}

}  // namespace

// ---------------------------------------------------------------------------
// Factored

Factored Factored::from_factors(std::vector<PrimePower> factors) {
  std::map<u64, unsigned> merged;
  for (const auto& f : factors) {
    if (f.exponent == 0) throw std::invalid_argument("Factored: zero exponent");
    if (!is_prime(f.prime))
      throw std::invalid_argument("Factored: non-prime base " + std::to_string(f.prime));
    merged[f.prime] += f.exponent;
  }
  Factored out;
  for (auto [p, e] : merged) out.factors_.push_back({p, e});
  return out;
}

std::optional<u64> Factored::value() const {
  u128 v = 1;
  for (const auto& f : factors_) {
    for (unsigned i = 0; i < f.exponent; ++i) {
      v *= f.prime;
      if (v > kMaxFactorable) return std::nullopt;
    }
  }
  return static_cast<u64>(v);
}

std::vector<u64> Factored::primes() const {
  std::vector<u64> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

unsigned Factored::exponent_of(u64 prime) const {
  for (const auto& f : factors_)
    if (f.prime == prime) return f.exponent;
  return 0;
}

bool Factored::divides(const Factored& other) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const PrimePower& f) { return other.exponent_of(f.prime) >= f.exponent; });
}

bool Factored::is_divisible_by(u64 m) const {
  if (m == 0) return false;
  return factorize(m).divides(*this);
}

Factored& Factored::operator*=(const Factored& other) {
  std::map<u64, unsigned> merged;
  for (const auto& f : factors_) merged[f.prime] += f.exponent;
  for (const auto& f : other.factors_) merged[f.prime] += f.exponent;
  factors_.clear();
  for (auto [p, e] : merged) factors_.push_back({p, e});
  return *this;
}

Factored Factored::divided_by(const Factored& divisor) const {
  if (!divisor.divides(*this)) throw std::domain_error("Factored: inexact division");
  Factored out;
  for (const auto& f : factors_) {
    const unsigned e = f.exponent - divisor.exponent_of(f.prime);
    if (e > 0) out.factors_.push_back({f.prime, e});
  }
  return out;
}

std::string Factored::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += " * ";
    s += std::to_string(f.prime);
    if (f.exponent > 1) s += "^" + std::to_string(f.exponent);
  }
  return s;
}

Factored factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  if (n > kMaxFactorable) throw std::invalid_argument("factorize: n exceeds 2^63 - 1");
  std::map<u64, unsigned> found;
  for (u64 p : sieve().primes) {
    if (p * p > n) break;
    while (n % p == 0) {
      ++found[p];
      n /= p;
    }
  }
  if (n > 1) {
    if (n <= kSieveLimit * kSieveLimit)
      ++found[n];
    else
      factor_rec64(n, found);
  }
  Factored out;
  std::vector<PrimePower> pp;
  for (auto [p, e] : found) pp.push_back({p, e});
  // Primes are already certified; skip re-validation.
  out = Factored::from_factors(std::move(pp));
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n <= kSieveLimit) return !sieve().composite[n];
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return false;
  if (n > kMaxFactorable) {
    // Mod64 needs n < 2^63 for the addition in rho; primality alone is fine via 128-bit.
    return is_probable_prime(static_cast<u128>(n));
  }
  const detail::Mod64 m(n);
  return detail::miller_rabin(m, n, kBases64, std::size(kBases64));
}

bool is_probable_prime(u128 n) {
  if (n < 2) return false;
  if (n <= kMaxFactorable) {
    const u64 v = static_cast<u64>(n);
    if (v <= kSieveLimit) return !sieve().composite[v];
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
      if (v % p == 0) return false;
    const detail::Mod64 m(v);
    return detail::miller_rabin(m, v, kBases64, std::size(kBases64));
  }
  if (n >> 127) throw std::overflow_error("is_probable_prime: n >= 2^127");
  if ((n & 1) == 0) return false;
  const detail::Mont128 m(n);
  return detail::miller_rabin(m, n, kBases128, std::size(kBases128));
}

u128 smallest_prime_factor(u128 n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_factor: n < 2");
  if (n >> 127) throw std::overflow_error("smallest_prime_factor: n >= 2^127");
  for (u64 p : sieve().primes) {
    if (static_cast<u128>(p) * p > n) return n;
    if (n % p == 0) return p;
  }
  if (is_probable_prime(n)) return n;
  std::vector<u128> factors;
  factor_rec128(n, factors);
  return *std::min_element(factors.begin(), factors.end());
}

std::optional<std::pair<u64, unsigned>> prime_power_decomposition(u64 n) {
  if (n < 2 || n > kMaxFactorable) return std::nullopt;
  const Factored f = factorize(n);
  if (f.factors().size() != 1) return std::nullopt;
  return std::make_pair(f.factors()[0].prime, f.factors()[0].exponent);
}

u64 gcd(u64 a, u64 b) { return detail::binary_gcd<u64>(a, b); }
u128 gcd(u128 a, u128 b) { return detail::binary_gcd<u128>(a, b); }

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

u64 pow_mod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u128 result = 1, b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<u64>(result);
}

u128 pow_mod_u128(u128 base, u128 exp, u128 mod) {
  if (mod == 0) throw std::invalid_argument("pow_mod_u128: modulus must be positive");
  if (mod == 1) return 0;
  if ((mod & 1) && (mod >> 127) == 0 && mod > 3) {
    const detail::Mont128 m(mod);
    return m.from(detail::mod_pow(m, m.to(base), exp));
  }
  // Even or tiny moduli: double-and-add multiplication.
  auto mulmod = [mod](u128 a, u128 b) {
    u128 r = 0;
    a %= mod;
    while (b) {
      if (b & 1) r = (r >= mod - a) ? r - (mod - a) : r + a;
      a = (a >= mod - a) ? a - (mod - a) : a + a;
      b >>= 1;
    }
    return r;
  };
  u128 result = 1, b = base % mod;
  while (exp) {
    if (exp & 1) result = mulmod(result, b);
    b = mulmod(b, b);
    exp >>= 1;
  }
  return result;
}

RPart r_part(u64 n, u64 r) {
  if (n == 0 || r == 0) throw std::invalid_argument("r_part: arguments must be positive");
  RPart out{1, n};
  for (u64 g = gcd(out.r_prime_part, r); g > 1; g = gcd(out.r_prime_part, r)) {
    out.r_prime_part /= g;
    out.r_part *= g;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

std::vector<i64> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<i64> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<i64> den = cyclotomic_polynomial(d);
    const std::size_t deg_den = den.size() - 1;
    std::vector<i64> quot(num.size() - deg_den, 0);
    for (std::size_t i = num.size() - 1; i + 1 > deg_den; --i) {
      const i64 c = num[i];  // den is monic
      quot[i - deg_den] = c;
      for (std::size_t j = 0; j <= deg_den; ++j) num[i - deg_den + j] -= c * den[j];
      if (i == deg_den) break;
    }
    num = std::move(quot);
  }
  return num;
}

std::optional<u128> cyclotomic_value(unsigned n, u64 q) {
  if (q < 2) throw std::invalid_argument("cyclotomic_value: q must be >= 2");
  const std::vector<i64> c = cyclotomic_polynomial(n);
  i128 acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (__builtin_mul_overflow(acc, static_cast<i128>(q), &acc)) return std::nullopt;
    if (__builtin_add_overflow(acc, static_cast<i128>(c[i]), &acc)) return std::nullopt;
  }
  if (acc <= 0) return std::nullopt;
  return static_cast<u128>(acc);
}

u64 multiplicative_order(u64 q, u64 r) {
  if (r < 2 || q % r == 0) throw std::invalid_argument("multiplicative_order: q not a unit mod r");
  u64 order = r - 1;
  for (const auto& f : factorize(r - 1).factors()) {
    for (unsigned i = 0; i < f.exponent && order % f.prime == 0; ++i) {
      if (pow_mod(q, order / f.prime, r) != 1) break;
      order /= f.prime;
    }
  }
  return order;
}

std::optional<u128> zsigmondy(u64 q, unsigned n) {
  if (q < 2) throw std::invalid_argument("zsigmondy: q must be >= 2");
  if (n < 3) throw std::invalid_argument("zsigmondy: n must be >= 3");
  if (q > kMaxFactorable) throw std::invalid_argument("zsigmondy: q exceeds 2^63 - 1");

  // Every primitive prime divisor satisfies r = 1 (mod n). Scan those first.
  const std::vector<u64> n_primes = factorize(n).primes();
  const auto& s = sieve();
  for (u64 r = n + 1; r <= kSieveLimit; r += n) {
    if (s.composite[r] || q % r == 0) continue;
    if (pow_mod(q, n, r) != 1) continue;
    bool primitive = true;
    for (u64 l : n_primes) {
      if (pow_mod(q, n / l, r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return r;
  }

  // All remaining candidates exceed the sieve bound. The primitive prime
  // divisors are exactly the prime factors of Phi_n(q) coprime to n.
  const std::optional<u128> phi = cyclotomic_value(n, q);
  if (!phi) throw std::overflow_error("zsigmondy: Phi_n(q) exceeds 127 bits");
  u128 rest = *phi;
  for (u64 l : n_primes)
    while (rest % l == 0) rest /= l;
  if (rest == 1) return std::nullopt;
  if (rest <= static_cast<u128>(kSieveLimit) * kSieveLimit) return rest;
  return smallest_prime_factor(rest);
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u128 parse_u128(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_u128: empty string");
  u128 v = 0;
  const u128 max = ~static_cast<u128>(0);
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("parse_u128: not a decimal integer");
    const unsigned digit = static_cast<unsigned>(ch - '0');
    if (v > (max - digit) / 10) throw std::overflow_error("parse_u128: value too large");
    v = v * 10 + digit;
  }
  return v;
}

// ---------------------------------------------------------------------------
// gcd identities

std::string to_string(GcdIdentity id) {
  switch (id) {
    case GcdIdentity::kE6: return "E6-gcd";
    case GcdIdentity::kSp: return "Sp-gcd";
  }
  return "?";
}

GcdCheck check_e6_gcd(u64 q) {
  if (q < 2 || q > 1'000'000) throw std::invalid_argument("check_e6_gcd: q must lie in [2, 10^6]");
  const u64 m = q * q - q + 1;
  const u64 a = (pow_mod(q, 5, m) + m - 1) % m;
  const u64 b = (q + 1) % m;
  const u64 prod = static_cast<u64>(static_cast<u128>(a) * b % m);
  GcdCheck c;
  c.q = q;
  c.identity = GcdIdentity::kE6;
  c.lhs = gcd(prod, m);
  c.rhs = gcd(q + 1, u64{3});
  return c;
}

int sp_gcd_epsilon(unsigned n, u64 q) {
  const auto pk = prime_power_decomposition(q);
  if (!pk || pk->first == 2) throw std::invalid_argument("sp_gcd: q must be an odd prime power");
  if (n < 2) throw std::invalid_argument("sp_gcd: n must be >= 2");
  return (static_cast<u64>(pk->second) * (n - 1)) % 2 == 1 ? 1 : -1;
}

GcdCheck check_sp_gcd(unsigned n, u64 q) {
  const int eps = sp_gcd_epsilon(n, q);
  const u64 p = prime_power_decomposition(q)->first;
  const u64 m = p + 1;
  const u64 t = pow_mod(q, n - 1, m);
  const u64 residue = eps == 1 ? (t + m - 1) % m : (t + 1) % m;
  GcdCheck c;
  c.q = q;
  c.identity = GcdIdentity::kSp;
  c.n = n;
  c.epsilon = eps;
  c.lhs = gcd(residue, m);
  c.rhs = 2;
  return c;
}

std::vector<GcdCheck> gcd_identity_suite(u64 q_lo, u64 q_hi, unsigned n_max) {
  if (q_lo < 2 || q_hi > 1'000'000 || q_lo > q_hi)
    throw std::invalid_argument("gcd_identity_suite: range must lie within [2, 10^6]");
  std::vector<GcdCheck> out;
  for (u64 q = q_lo; q <= q_hi; ++q) out.push_back(check_e6_gcd(q));
  for (u64 q = q_lo; q <= q_hi; ++q) {
    if (q % 2 == 0) continue;
    if (!prime_power_decomposition(q)) continue;
    for (unsigned n = 2; n <= n_max; ++n) out.push_back(check_sp_gcd(n, q));
  }
  return out;
}

}  // namespace omega
