// Modular arithmetic back ends for Miller-Rabin and Pollard-Brent rho.
// Internal header; not installed.

#ifndef OMEGA_SRC_MODARITH_HPP_
#define OMEGA_SRC_MODARITH_HPP_

#include <array>
#include <utility>

#include "omega/arith.hpp"

namespace omega::detail {

// Plain reduction for moduli below 2^63.
class Mod64 {
public:
  using value_type = u64;

  explicit Mod64(u64 n) : n_(n) {}

  u64 modulus() const { return n_; }
  u64 to(u64 a) const { return a % n_; }
  u64 from(u64 a) const { return a; }
  u64 one() const { return 1 % n_; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % n_); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= n_ ? s - n_ : s;
  }

private:
  u64 n_;
};

struct U256 {
  u128 lo;
  u128 hi;
};

inline U256 mul_wide(u128 a, u128 b) {
  const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
  const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
  const u128 p00 = static_cast<u128>(a0) * b0;
  const u128 p01 = static_cast<u128>(a0) * b1;
  const u128 p10 = static_cast<u128>(a1) * b0;
  const u128 p11 = static_cast<u128>(a1) * b1;
  const u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
  U256 r;
  r.lo = (mid << 64) | static_cast<u64>(p00);
  r.hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return r;
}

// Montgomery arithmetic with R = 2^128 for odd moduli below 2^127.
class Mont128 {
public:
  using value_type = u128;

  explicit Mont128(u128 n) : n_(n) {
    u128 inv = n;  // correct to 3 bits for odd n
    for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
    neg_inv_ = static_cast<u128>(0) - inv;
    one_ = (static_cast<u128>(0) - n) % n;
    u128 t = one_;
    for (int i = 0; i < 128; ++i) {
      t += t;
      if (t >= n_) t -= n_;
    }
    r2_ = t;
  }

  u128 modulus() const { return n_; }
  u128 one() const { return one_; }
  u128 to(u128 a) const { return mul(a % n_, r2_); }
  u128 from(u128 a) const { return reduce({a, 0}); }
  u128 mul(u128 a, u128 b) const { return reduce(mul_wide(a, b)); }
  u128 add(u128 a, u128 b) const {
    u128 s = a + b;
    return s >= n_ ? s - n_ : s;
  }

private:
  u128 reduce(U256 t) const {
    const u128 m = t.lo * neg_inv_;
    const U256 mn = mul_wide(m, n_);
    const u128 lo = t.lo + mn.lo;
    const u128 carry = lo < t.lo ? 1 : 0;
    u128 r = t.hi + mn.hi + carry;
    if (r >= n_) r -= n_;
    return r;
  }

  u128 n_;
  u128 neg_inv_;
  u128 one_;
  u128 r2_;
};

template <class M>
typename M::value_type mod_pow(const M& m, typename M::value_type base,
                               typename M::value_type exp) {
  auto result = m.one();
  while (exp > 0) {
    if (exp & 1) result = m.mul(result, base);
    base = m.mul(base, base);
    exp >>= 1;
  }
  return result;
}

// n odd, n > 3.
template <class M>
bool miller_rabin(const M& m, typename M::value_type n,
                  const typename M::value_type* bases, std::size_t count) {
  using T = typename M::value_type;
  T d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const T one = m.one();
  const T minus_one = m.to(n - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const T a = bases[i] % n;
    if (a == 0) continue;
    T x = mod_pow(m, m.to(a), d);
    if (x == one || x == minus_one) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = m.mul(x, x);
      if (x == minus_one) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

template <class T>
T binary_gcd(T a, T b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = 0;
  while (((a | b) & 1) == 0) {
    a >>= 1;
    b >>= 1;
    ++shift;
  }
  while ((a & 1) == 0) a >>= 1;
  do {
    while ((b & 1) == 0) b >>= 1;
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

// Pollard-Brent rho. n odd composite. Returns a nontrivial factor.
template <class M>
typename M::value_type pollard_brent(typename M::value_type n) {
  using T = typename M::value_type;
  const M m(n);
  constexpr int kBatch = 128;
  for (T c = 1;; ++c) {
    const T cm = m.to(c);
    auto f = [&](T x) { return m.add(m.mul(x, x), cm); };
    T y = m.to(2), x = y, ys = y, q = m.one(), g = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const u64 lim = (r - k) < static_cast<u64>(kBatch) ? (r - k) : kBatch;
        for (u64 i = 0; i < lim; ++i) {
          y = f(y);
          q = m.mul(q, x > y ? x - y : y - x);
        }
        g = binary_gcd<T>(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = binary_gcd<T>(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace omega::detail

#endif  // OMEGA_SRC_MODARITH_HPP_
