// Shared helpers for the unit tests: a seeded generator and naive reference
// implementations that share no code with the library.

#ifndef OMEGA_TESTS_SUPPORT_HPP_
#define OMEGA_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace test {

using u64 = std::uint64_t;

// splitmix64; fixed seeds keep every property test reproducible.
class Rng {
public:
  explicit Rng(u64 seed) : state_(seed) {}
  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi].
  u64 range(u64 lo, u64 hi) { return lo + next() % (hi - lo + 1); }

private:
  u64 state_;
};

inline std::map<u64, unsigned> naive_factor(u64 n) {
  std::map<u64, unsigned> f;
  for (u64 d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  if (n > 1) ++f[n];
  return f;
}

inline bool naive_is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline u64 naive_pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  for (u64 i = 0; i < e; ++i) r = static_cast<u64>((static_cast<unsigned __int128>(r) * b) % m);
  return r;
}

// Smallest prime r dividing q^n - 1 but no q^i - 1 with i < n, scanning
// candidates r = 1 mod n directly (every primitive prime divisor has this
// form). Returns 0 when none exists below `limit`.
inline u64 naive_primitive_divisor(u64 q, unsigned n, u64 limit) {
  for (u64 r = n + 1; r <= limit; r += n) {
    if (!naive_is_prime(r) || q % r == 0) continue;
    if (naive_pow_mod(q, n, r) != 1) continue;
    bool earlier = false;
    for (unsigned i = 1; i < n && !earlier; ++i) earlier = naive_pow_mod(q, i, r) == 1;
    if (!earlier) return r;
  }
  return 0;
}

// All divisors of all members.
inline std::set<u64> divisor_closure(const std::vector<u64>& gens) {
  std::set<u64> s;
  for (u64 g : gens)
    for (u64 d = 1; d <= g; ++d)
      if (g % d == 0) s.insert(d);
  return s;
}

// Maximal elements under divisibility, sorted.
inline std::vector<u64> naive_maximal(const std::set<u64>& s) {
  std::vector<u64> out;
  for (u64 a : s) {
    bool dominated = false;
    for (u64 b : s)
      if (b != a && b % a == 0) dominated = true;
    if (!dominated) out.push_back(a);
  }
  return out;
}

// Dense matrices over Z/p for prime p, used as an arithmetic reference.
using IntMatrix = std::vector<std::vector<long long>>;

inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, long long p) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long s = 0;
      for (std::size_t k = 0; k < n; ++k) s = (s + a[i][k] * b[k][j]) % p;
      c[i][j] = s;
    }
  return c;
}

inline bool int_is_identity(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& tag) {
  static Rng rng(0x5eed);
  auto dir = std::filesystem::temp_directory_path() / ("omega-test-" + tag + "-" + std::to_string(rng.next()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace test

#endif  // OMEGA_TESTS_SUPPORT_HPP_
