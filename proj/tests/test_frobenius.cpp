#include <doctest.h>

#include "omega/classical.hpp"
#include "omega/frobenius.hpp"
#include "support.hpp"

using namespace omega;

namespace {

// Independent criterion: G = <K, C> has order |K||C| and every nontrivial
// k in K has its centraliser inside K.
bool frobenius_by_centralisers(const FrobeniusWitness& w) {
  std::vector<Matrix> all = w.kernel_gens;
  all.insert(all.end(), w.complement_gens.begin(), w.complement_gens.end());
  const Enumeration g = closure(all);
  const Enumeration k = closure(w.kernel_gens);
  const Enumeration c = closure(w.complement_gens);
  if (g.size() != k.size() * c.size()) return false;
  for (u64 i = 0; i < k.size(); ++i) {
    const Matrix x = k.matrix(i);
    if (x.is_identity()) continue;
    for (u64 j = 0; j < g.size(); ++j) {
      const Matrix y = g.matrix(j);
      if (y * x == x * y && !k.index_of(y.codes())) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Frobenius witnesses pass and match their claimed orders") {
  struct Case {
    FrobeniusKind kind;
    unsigned n;
    u64 q;
    unsigned k;
  };
  const std::vector<Case> cases{{FrobeniusKind::SlAffine, 2, 4, 0}, {FrobeniusKind::SlAffine, 3, 2, 0},
                                {FrobeniusKind::SlAffine, 3, 3, 0}, {FrobeniusKind::SlAffine, 3, 4, 0},
                                {FrobeniusKind::SlAffine, 4, 2, 0}, {FrobeniusKind::SlLine, 4, 4, 1},
                                {FrobeniusKind::SlLine, 4, 2, 2},   {FrobeniusKind::SlLine, 4, 3, 1},
                                {FrobeniusKind::SlLine, 5, 2, 2},   {FrobeniusKind::SpCyclic, 2, 2, 0}};
  for (const auto& c : cases) {
    INFO(to_string(c.kind), " n=", c.n, " q=", c.q, " k=", c.k);
    const FrobeniusWitness w = frobenius_witness(c.kind, c.n, c.q, c.k);
    const FrobeniusVerdict v = verify_frobenius(w.kernel_gens, w.complement_gens);
    CHECK(v.pass);
    CHECK(v.reason.empty());
    CHECK(v.kernel_order == w.kernel_order);
    CHECK(v.complement_order == w.complement_order);
    CHECK(v.complement_cyclic);
    for (const auto* list : {&w.kernel_gens, &w.complement_gens})
      for (const auto& m : *list) CHECK(preserves_form(w.ambient, m));
    CHECK(frobenius_by_centralisers(w));
  }
}

TEST_CASE("sl-affine complement sizes") {
  // (q^{n-1} - 1) with the primes of gcd(n, q - 1) removed.
  CHECK(frobenius_witness(FrobeniusKind::SlAffine, 3, 4, 0).complement_order == 5);
  CHECK(frobenius_witness(FrobeniusKind::SlAffine, 3, 3, 0).complement_order == 8);
  CHECK(frobenius_witness(FrobeniusKind::SlAffine, 3, 7, 0).complement_order == 16);
  CHECK(frobenius_witness(FrobeniusKind::SlAffine, 2, 5, 0).complement_order == 1);
}

TEST_CASE("verify_frobenius rejects non-Frobenius pairs") {
  const FieldPtr f = field_of_order(2);
  const Matrix c3 = Matrix::from_ints(f, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
  const FrobeniusVerdict same = verify_frobenius({c3}, {c3});
  CHECK_FALSE(same.pass);
  CHECK(same.counterexample.has_value());

  // q = 2, k = 1 gives the complement q^k - 1 = 1.
  CHECK_FALSE(verify_frobenius(frobenius_witness(FrobeniusKind::SlLine, 4, 2, 1).kernel_gens,
                               frobenius_witness(FrobeniusKind::SlLine, 4, 2, 1).complement_gens)
                  .pass);

  const FrobeniusWitness w = frobenius_witness(FrobeniusKind::SlAffine, 2, 5, 0);
  const FrobeniusVerdict trivial = verify_frobenius(w.kernel_gens, w.complement_gens);
  CHECK_FALSE(trivial.pass);
  CHECK(trivial.complement_order == 1);

  // Commuting kernel and complement: two disjoint transpositions in Sym4.
  const Matrix t1 = Matrix::from_ints(f, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
  const Matrix t2 = Matrix::from_ints(f, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  const FrobeniusVerdict commuting = verify_frobenius({t1}, {t2});
  CHECK_FALSE(commuting.pass);
  REQUIRE(commuting.counterexample.has_value());
  const auto& [x, y] = *commuting.counterexample;
  CHECK(x * y == y * x);

  // A complement that does not normalise the kernel.
  const Matrix t3 = Matrix::from_ints(f, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
  CHECK_FALSE(verify_frobenius({t1}, {t3}).pass);

  CHECK_FALSE(verify_frobenius({}, {t1}).pass);
  CHECK_FALSE(verify_frobenius({t1}, {Matrix::identity(field_of_order(3), 4)}).pass);
}

TEST_CASE("bad witness parameters") {
  CHECK_THROWS_AS(frobenius_witness(FrobeniusKind::SlLine, 3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_witness(FrobeniusKind::SlLine, 4, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_witness(FrobeniusKind::SlAffine, 1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_witness(FrobeniusKind::SpCyclic, 2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_witness(FrobeniusKind::SpCyclic, 3, 2, 0), std::invalid_argument);
  CHECK(parse_frobenius_kind("sl-line") == FrobeniusKind::SlLine);
  CHECK_THROWS_AS(parse_frobenius_kind("psl"), std::invalid_argument);
}

TEST_CASE("singer cycles") {
  for (auto [q, k] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {2, 3}, {2, 5}, {3, 2}, {4, 2}, {5, 3}, {9, 2}}) {
    const Matrix s = singer_cycle(field_of_order(q), k);
    const u64 order = checked_pow(q, k) - 1;
    CHECK(s.order_by_powering(order) == order);
    CHECK(min_poly_degree(s) == k);
  }
}
