#include <doctest.h>

#include <stdexcept>

#include "omega/arith.hpp"
#include "support.hpp"

using namespace omega;

TEST_CASE("factorize: worked values") {
  CHECK(factorize(1).is_one());
  CHECK(factorize(1).factors().empty());
  CHECK(factorize(51840).factors() == std::vector<PrimePower>{{2, 7}, {3, 4}, {5, 1}});
  CHECK(factorize(5115).factors() == std::vector<PrimePower>{{3, 1}, {5, 1}, {11, 1}, {31, 1}});
  CHECK(factorize(51840).to_string() == "2^7 * 3^4 * 5");
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize: reconstruction for every n up to 10^6") {
  for (u64 n = 1; n <= 1000000; ++n) {
    const Factored f = factorize(n);
    u64 product = 1;
    u64 last = 0;
    for (const auto& pp : f.factors()) {
      REQUIRE(pp.prime > last);
      REQUIRE(pp.exponent >= 1);
      last = pp.prime;
      for (unsigned i = 0; i < pp.exponent; ++i) product *= pp.prime;
    }
    REQUIRE(product == n);
    REQUIRE(f.value() == n);
  }
}

TEST_CASE("factorize: agrees with trial division on random 40-bit values") {
  test::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const u64 n = rng.range(2, u64{1} << 40);
    std::vector<PrimePower> expected;
    for (auto [p, e] : test::naive_factor(n)) expected.push_back({p, e});
    REQUIRE(factorize(n).factors() == expected);
  }
}

TEST_CASE("factorize: large semiprimes and prime powers") {
  const u64 p = 4294967291ULL, q = 2147483647ULL;  // primes
  CHECK(factorize(p * q).factors() == std::vector<PrimePower>{{q, 1}, {p, 1}});
  CHECK(factorize(kMaxFactorable).value() == kMaxFactorable);
  CHECK(factorize(u64{1} << 62).factors() == std::vector<PrimePower>{{2, 62}});
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime(3215031751ULL));     // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("Factored arithmetic stays exact past 64 bits") {
  Factored big = factorize(u64{1} << 62) * factorize(u64{1} << 62);
  CHECK(big.too_large());
  CHECK(big.exponent_of(2) == 124);
  CHECK(factorize(8).divides(big));
  CHECK_FALSE(factorize(12).divides(big));
  CHECK_FALSE(factorize(3).divides(big));
  CHECK(big.divided_by(factorize(u64{1} << 62)) == factorize(u64{1} << 62));
  CHECK_THROWS_AS(factorize(6).divided_by(factorize(4)), std::domain_error);
  CHECK(factorize(360).is_divisible_by(40));
  CHECK_FALSE(factorize(360).is_divisible_by(16));
  CHECK_THROWS_AS(Factored::from_factors({{4, 1}}), std::invalid_argument);
  CHECK(Factored::from_factors({{3, 1}, {2, 2}, {3, 1}}) == factorize(36));
}

TEST_CASE("r_part: worked values and invariants") {
  CHECK(r_part(48, 2) == RPart{16, 3});
  CHECK(r_part(77, 1) == RPart{1, 77});
  CHECK(r_part(5115, 15) == RPart{15, 341});
  test::Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const u64 n = rng.range(1, 1000000), r = rng.range(1, 200);
    const RPart part = r_part(n, r);
    REQUIRE(part.r_part * part.r_prime_part == n);
    for (auto [p, e] : test::naive_factor(part.r_prime_part)) REQUIRE(r % p != 0);
    for (auto [p, e] : test::naive_factor(part.r_part)) REQUIRE(r % p == 0);
  }
}

TEST_CASE("gcd, lcm and checked arithmetic") {
  test::Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    const u64 a = rng.range(1, 1u << 30), b = rng.range(1, 1u << 30);
    REQUIRE(gcd(a, b) == std::gcd(a, b));
    REQUIRE(lcm(a, b) == std::lcm(a, b));
  }
  CHECK(checked_pow(3, 40) == 12157665459056928801ULL);
  CHECK_THROWS_AS(checked_pow(3, 41), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(u64{1} << 32, u64{1} << 32), std::overflow_error);
  CHECK(pow_mod(3, 1000, 1000007) == test::naive_pow_mod(3, 1000, 1000007));
  const u128 m = (u128{1} << 89) - 1;  // prime
  CHECK(pow_mod_u128(5, m - 1, m) == 1);
  CHECK(pow_mod_u128(7, 0, 10) == 1);
  CHECK(pow_mod_u128(12, 5, 16) == 0);
}

TEST_CASE("prime_power_decomposition") {
  CHECK(prime_power_decomposition(1024) == std::pair<u64, unsigned>{2, 10});
  CHECK(prime_power_decomposition(7) == std::pair<u64, unsigned>{7, 1});
  CHECK_FALSE(prime_power_decomposition(12).has_value());
  CHECK_FALSE(prime_power_decomposition(1).has_value());
}

TEST_CASE("cyclotomic values") {
  CHECK(cyclotomic_polynomial(6) == std::vector<i64>{1, -1, 1});
  CHECK(cyclotomic_value(9, 2) == u128{73});
  CHECK(cyclotomic_value(18, 3) == u128{703});
  CHECK(cyclotomic_value(1, 10) == u128{9});
  // Phi_n(q) multiplies to q^n - 1 over the divisors of n.
  for (u64 q = 2; q <= 7; ++q)
    for (unsigned n = 1; n <= 12; ++n) {
      u128 product = 1;
      for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) product *= *cyclotomic_value(d, q);
      u128 expected = 1;
      for (unsigned i = 0; i < n; ++i) expected *= q;
      REQUIRE(product == expected - 1);
    }
}

TEST_CASE("zsigmondy: worked values and domain") {
  CHECK_FALSE(zsigmondy(2, 6).has_value());
  CHECK(zsigmondy(2, 3) == u128{7});
  CHECK(zsigmondy(3, 4) == u128{5});
  CHECK(zsigmondy(2, 9) == u128{73});
  CHECK(zsigmondy(2, 18) == u128{19});
  CHECK_THROWS_AS(zsigmondy(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(zsigmondy(1, 5), std::invalid_argument);
}

TEST_CASE("zsigmondy: agrees with a brute-force scan and r = 1 mod n") {
  for (u64 q = 2; q <= 12; ++q)
    for (unsigned n = 3; n <= 12; ++n) {
      if (q == 2 && n == 6) continue;
      const auto r = zsigmondy(q, n);
      REQUIRE(r.has_value());
      const u64 rr = static_cast<u64>(*r);
      REQUIRE(rr % n == 1);
      REQUIRE(test::naive_primitive_divisor(q, n, rr) == rr);
    }
}

TEST_CASE("u128 text round trip") {
  const u128 v = (u128{1} << 100) + 12345;
  CHECK(parse_u128(to_string(v)) == v);
  CHECK(to_string(u128{0}) == "0");
  CHECK_THROWS(parse_u128("12a"));
}

TEST_CASE("gcd identities") {
  const GcdCheck e4 = check_e6_gcd(4);
  CHECK(e4.lhs == 1);
  CHECK(e4.rhs == 1);
  CHECK(e4.pass());
  CHECK(check_e6_gcd(2).pass());
  CHECK(check_e6_gcd(5).rhs == 3);

  // q = 3, n = 3: k(n-1) = 2 is even, so the sign is -1 and the left side is
  // gcd(3^2 + 1, 4) = 2.
  const GcdCheck sp = check_sp_gcd(3, 3);
  CHECK(sp.epsilon == -1);
  CHECK(sp.lhs == 2);
  CHECK(sp.pass());
  CHECK(sp_gcd_epsilon(2, 3) == 1);
  CHECK(sp_gcd_epsilon(3, 9) == -1);
  CHECK_THROWS_AS(check_sp_gcd(3, 4), std::invalid_argument);

  const auto suite = gcd_identity_suite(2, 1000);
  std::size_t e6 = 0;
  for (const auto& c : suite) {
    REQUIRE(c.pass());
    if (c.identity == GcdIdentity::kE6) ++e6;
  }
  CHECK(e6 == 999);
  // Independent check of the E6 identity by direct evaluation.
  for (u64 q = 2; q <= 1000; ++q) {
    const u64 lhs = std::gcd((q * q * q * q * q - 1) * (q + 1), q * q - q + 1);
    REQUIRE(lhs == std::gcd(q + 1, u64{3}));
  }
}
