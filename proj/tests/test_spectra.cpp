#include <doctest.h>

#include "omega/classical.hpp"
#include "omega/matrix_group.hpp"
#include "omega/spectra.hpp"
#include "support.hpp"

using namespace omega;

namespace {

using i128s = __int128;

u64 ipow(u64 q, unsigned e) {
  u64 v = 1;
  for (unsigned i = 0; i < e; ++i) v *= q;
  return v;
}

// The nine E6 numbers evaluated directly with signed arithmetic.
std::vector<u64> e6_numbers(u64 q, int eps) {
  const i128s Q = q, e = eps;
  const i128s d = std::gcd(u64{3}, static_cast<u64>(q - eps));
  auto P = [&](int k) { return static_cast<i128s>(ipow(q, static_cast<unsigned>(k))); };
  const std::vector<i128s> v{(P(6) + e * P(3) + 1) / d,
                             (P(4) - P(2) + 1) * (P(2) + e * Q + 1) / d,
                             (P(5) - e) * (Q + e) / d,
                             P(5) - e,
                             (P(4) + 1) * (P(2) - 1) / d,
                             (P(6) - 1) / d,
                             (P(3) - e) * (Q + e),
                             (P(4) - 1) * (P(2) - e * Q + 1) / d,
                             P(4) - 1};
  std::vector<u64> out;
  for (auto x : v) out.push_back(static_cast<u64>(x));
  return out;
}

std::vector<u64> e7_numbers(u64 q) {
  std::vector<u64> out;
  const i128s Q = q;
  const i128s two = std::gcd(u64{2}, q - 1);
  auto P = [&](int k) { return static_cast<i128s>(ipow(q, static_cast<unsigned>(k))); };
  for (int eps : {1, -1}) {
    const i128s e = eps;
    for (i128s x : {(P(6) + e * P(3) + 1) * (Q - e), P(7) - e, (P(4) - P(2) + 1) * (P(3) - e),
                    (P(5) - e) * (P(2) + e * Q + 1), (P(5) - e) * (Q + e), (P(4) + 1) * (P(2) + 1) * (Q - e) / two,
                    (P(4) + 1) * (P(2) - 1), (P(4) - 1) * (P(2) + e * Q + 1), P(6) - 1})
      out.push_back(static_cast<u64>(x));
  }
  return out;
}

std::vector<u64> maximal_of(const std::vector<u64>& values) {
  std::vector<u64> out;
  for (u64 a : values) {
    bool dominated = false;
    for (u64 b : values)
      if (b != a && b % a == 0) dominated = true;
    if (!dominated && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("canonicalize: worked values") {
  CHECK(canonicalize({31, 93}).generators() == std::vector<u64>{93});
  CHECK(canonicalize({8, 10, 4}).generators() == std::vector<u64>{8, 10});
  CHECK(canonicalize({73, 91, 93, 31, 51, 63, 21, 45, 15}).generators() ==
        std::vector<u64>{45, 51, 63, 73, 91, 93});
  CHECK_THROWS_AS(canonicalize({}), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize({3, 0}), std::invalid_argument);
}

TEST_CASE("canonicalize: property against a divisor-closure oracle") {
  test::Rng rng(2024);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<u64> values(rng.range(1, 8));
    for (auto& v : values) v = rng.range(1, 400);
    const SpectrumDescriptor d = canonicalize(values);
    const auto closure = test::divisor_closure(values);
    REQUIRE(d.generators() == test::naive_maximal(closure));
    REQUIRE(canonicalize(d.generators()) == d);
    for (u64 m = 1; m <= 400; ++m) REQUIRE(d.contains(m) == (closure.count(m) == 1));
    std::vector<u64> shuffled = values;
    for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.next() % i]);
    REQUIRE(canonicalize(shuffled) == d);
  }
}

TEST_CASE("contains and elements") {
  const auto d = canonicalize({93});
  CHECK(contains(d, 31));
  CHECK_FALSE(contains(d, 6));
  CHECK(contains(e6_semisimple_spectrum(2, 1), 73));
  CHECK(canonicalize({12, 8}).elements() == std::vector<u64>{1, 2, 3, 4, 6, 8, 12});
  CHECK(canonicalize({12, 8}).max_element() == 12);
}

TEST_CASE("split_by_characteristic") {
  const auto s = split_by_characteristic(canonicalize({12, 8, 5}), 2);
  CHECK(s.p_exponent == 8);
  CHECK(s.p_prime.generators() == std::vector<u64>{3, 5});
  CHECK(s.mixed.generators() == std::vector<u64>{12});

  const auto t = split_by_characteristic(canonicalize({7}), 2);
  CHECK(t.p_exponent == 1);
  CHECK(t.p_prime.generators() == std::vector<u64>{7});
  CHECK(t.mixed.empty());

  CHECK_THROWS_AS(split_by_characteristic(canonicalize({12}), 4), std::invalid_argument);
  CHECK_THROWS_AS(split_by_characteristic(canonicalize({12}, SpectrumScope::PPrimeOnly), 2), std::invalid_argument);

  test::Rng rng(77);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<u64> values(rng.range(1, 6));
    for (auto& v : values) v = rng.range(1, 300);
    const u64 p = std::vector<u64>{2, 3, 5}[rng.next() % 3];
    const auto split = split_by_characteristic(canonicalize(values), p);
    for (u64 m : test::divisor_closure(values)) {
      u64 rest = m;
      while (rest % p == 0) rest /= p;
      if (m % p != 0)
        REQUIRE(split.p_prime.contains(m));
      else if (rest == 1)
        REQUIRE(split.p_exponent % m == 0);
      else
        REQUIRE(split.mixed.contains(m));
    }
  }
}

TEST_CASE("E6 descriptors match a direct evaluation") {
  CHECK(e6_semisimple_spectrum(2, 1).generators() == std::vector<u64>{45, 51, 63, 73, 91, 93});
  for (u64 q : {2, 3, 4, 5, 7, 8, 9, 11, 13})
    for (int eps : {1, -1}) {
      const auto d = e6_semisimple_spectrum(q, eps);
      REQUIRE(d.scope() == SpectrumScope::PPrimeOnly);
      REQUIRE(d.generators() == maximal_of(e6_numbers(q, eps)));
      for (u64 g : d.generators()) REQUIRE(g % factorize(q).primes().front() != 0);
    }
}

TEST_CASE("E7 descriptors match a direct evaluation") {
  const auto d2 = e7_semisimple_spectrum(2);
  CHECK(d2.contains(127));
  for (u64 q : {2, 3, 4, 5, 7, 8, 9}) REQUIRE(e7_semisimple_spectrum(q).generators() == maximal_of(e7_numbers(q)));
  // r_9(2) = 73 is adjacent to no odd prime of the descriptor.
  for (u64 r : prime_graph(d2).vertices())
    if (r != 73) CHECK_FALSE(d2.contains(73 * r));
}

TEST_CASE("descriptor generators divide the group order") {
  for (u64 q : {2, 3, 4, 5}) {
    for (int eps : {1, -1}) {
      const GroupSpec s = make_group_spec(eps > 0 ? Family::E6 : Family::E6_2, 6, q, Version::Simple);
      for (u64 g : e6_semisimple_spectrum(q, eps).generators()) REQUIRE(factorize(g).divides(group_order(s)));
    }
    const GroupSpec e7 = make_group_spec(Family::E7, 7, q, Version::Universal);
    for (u64 g : e7_semisimple_spectrum(q).generators()) REQUIRE(factorize(g).divides(group_order(e7)));
  }
}

TEST_CASE("3D4 mixed orders") {
  const auto d = d43_mixed_spectrum(4);
  CHECK(d.generators() == std::vector<u64>{52, 84, 126, 130});
  CHECK(d.scope() == SpectrumScope::MixedOnly);
  CHECK_FALSE(d.contains(30));
  CHECK_FALSE(d.contains(20));
  CHECK_THROWS_AS(d43_mixed_spectrum(3), std::invalid_argument);
}

TEST_CASE("symplectic torus spectrum") {
  CHECK(symplectic_torus_spectrum(2, 3).generators() == std::vector<u64>{8, 10});
  CHECK(symplectic_torus_spectrum(2, 4).generators() == std::vector<u64>{15, 17});
  CHECK(symplectic_torus_spectrum(3, 2).generators() == std::vector<u64>{7, 9, 15});
  // Oracle cross-check on groups cheap enough for a unit test.
  for (const char* spec : {"C(2,2)u", "C(2,3)u"}) {
    const GroupSpec s = parse_group_spec(spec);
    const Enumeration e = enumerate(classical_generators(s));
    const auto oracle = split_by_characteristic(canonicalize(e.table().spectrum), s.p).p_prime;
    CHECK(symplectic_torus_spectrum(s.rank, s.q).generators() == oracle.generators());
  }
}

TEST_CASE("closed_form_semisimple_spectrum dispatch") {
  CHECK(closed_form_semisimple_spectrum(parse_group_spec("E6(2)s")) == e6_semisimple_spectrum(2, 1));
  CHECK(closed_form_semisimple_spectrum(parse_group_spec("2E6(2)s")) == e6_semisimple_spectrum(2, -1));
  CHECK(closed_form_semisimple_spectrum(parse_group_spec("E7(3)u")) == e7_semisimple_spectrum(3));
  CHECK(closed_form_semisimple_spectrum(parse_group_spec("B(3,3)s")) == symplectic_torus_spectrum(3, 3));
  CHECK_FALSE(closed_form_semisimple_spectrum(parse_group_spec("B(3,3)s")).note().empty());
  CHECK_THROWS_AS(closed_form_semisimple_spectrum(parse_group_spec("A(2,3)s")), std::invalid_argument);
}

TEST_CASE("prime graphs and non-adjacency witnesses") {
  const PrimeGraph a5 = prime_graph(canonicalize({2, 3, 5}));
  CHECK(a5.vertices() == std::vector<u64>{2, 3, 5});
  CHECK(a5.edges().empty());
  for (const auto& [r, t] : pg_nonadjacency_witnesses(a5)) CHECK(t.has_value());

  const PrimeGraph tri = prime_graph(canonicalize({30}));
  CHECK(tri.edges().size() == 3);
  CHECK(tri.components().size() == 1);
  for (const auto& [r, t] : pg_nonadjacency_witnesses(tri)) CHECK_FALSE(t.has_value());

  const PrimeGraph sp44 = prime_graph(canonicalize({4, 6, 10, 15, 17}));
  CHECK(sp44.edges() == std::vector<std::pair<u64, u64>>{{2, 3}, {2, 5}, {3, 5}});
  CHECK(sp44.components() == std::vector<std::vector<u64>>{{2, 3, 5}, {17}});
  CHECK(induced_subgraph(sp44, {2, 17}).edges().empty());

  // Adjacency agrees with direct membership on random spectra.
  test::Rng rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<u64> values(rng.range(1, 5));
    for (auto& v : values) v = rng.range(2, 500);
    const auto d = canonicalize(values);
    const PrimeGraph g = prime_graph(d);
    for (u64 r : g.vertices())
      for (u64 t : g.vertices())
        if (r < t) REQUIRE(g.adjacent(r, t) == d.contains(r * t));
  }
}
