#include <doctest.h>

#include <set>

#include "omega/claims.hpp"
#include "omega/classical.hpp"
#include "support.hpp"

using namespace omega;

namespace {

std::vector<std::string> ids_of(const SuiteFilter& f) {
  std::vector<std::string> out;
  for (const auto& c : claim_catalog())
    if (f.matches(c)) out.push_back(c.id);
  return out;
}

bool contains_all(const std::vector<std::string>& haystack, const std::vector<std::string>& needles) {
  for (const auto& n : needles)
    if (std::find(haystack.begin(), haystack.end(), n) == haystack.end()) return false;
  return true;
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& catalog = claim_catalog();
  REQUIRE(catalog.size() == 21);
  std::set<std::string> names;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const Claim& c = catalog[i];
    INFO(c.id);
    CHECK(c.id == "C" + std::to_string(i + 1));
    CHECK(names.insert(c.name).second);
    CHECK_FALSE(c.anchor.empty());
    CHECK_FALSE(c.topics.empty());
    CHECK_FALSE(c.grid.empty());
    CHECK(&find_claim(c.id) == &c);
    CHECK(&find_claim(c.name) == &c);
    if (c.strategy == Strategy::Skipped) {
      CHECK_FALSE(c.skip_reason.empty());
    } else {
      CHECK_FALSE(c.check.empty());
      CHECK(c.skip_reason.empty());
      for (const auto& params : c.grid) CHECK_FALSE(expand_instances(c, params).empty());
    }
  }
  CHECK_THROWS_AS(find_claim("C99"), ClaimError);
}

TEST_CASE("every topic is covered by some claim") {
  std::set<std::string> topics;
  for (const auto& c : claim_catalog()) topics.insert(c.topics.begin(), c.topics.end());
  for (const char* t : {"zsigmondy", "prime-graph", "split-extensions", "frobenius-action", "frobenius-sl",
                        "frobenius-sp", "min-poly", "sr-subgroups", "sr-spectrum", "e6-semisimple", "e7-semisimple",
                        "3d4-mixed", "gcd-identities", "s4-even", "s6-even", "torus", "odd-subsets", "f4", "o7-brauer",
                        "recognition"}) {
    INFO(t);
    CHECK(topics.count(t) == 1);
  }
}

TEST_CASE("parameter expansion and guards") {
  const Claim& c12 = find_claim("C12");
  CHECK(expand_instances(c12, json{{"q", "2..4"}, {"n", json::array({3, 5})}}).size() == 6);
  CHECK(expand_instances(c12, json{{"q", 7}, {"n", 9}}) == std::vector<json>{json{{"q", 7}, {"n", 9}}});

  const Claim& c1 = find_claim("C1");
  // Ranges keep only the members of the domain.
  CHECK(expand_instances(c1, json{{"q", "4..17"}}) ==
        std::vector<json>{json{{"q", 4}}, json{{"q", 8}}, json{{"q", 16}}});
  CHECK(expand_instances(c1, json{{"q", json::array({4, 6, 8})}}).size() == 2);
  // Explicit values outside the domain, or anything outside [min, max], are rejected.
  CHECK_THROWS_AS(expand_instances(c1, json{{"q", 6}}), ClaimError);
  CHECK_THROWS_AS(expand_instances(c1, json{{"q", 2}}), ClaimError);
  CHECK_THROWS_AS(expand_instances(c1, json{{"q", "2..8"}}), ClaimError);
  CHECK_THROWS_AS(expand_instances(c1, json{{"q", "6..6"}}), ClaimError);
  CHECK_THROWS_AS(expand_instances(c1, json{{"q", "8..4"}}), ClaimError);
  CHECK_THROWS_AS(expand_instances(c1, json{{"q", "4a"}}), ClaimError);
  CHECK_THROWS_AS(expand_instances(c1, json{{"q", 4}, {"r", 3}}), ClaimError);
  CHECK_THROWS_AS(expand_instances(c1, json::object()), ClaimError);
  CHECK_THROWS_AS(expand_instances(c1, json::array()), ClaimError);

  const Claim& c3 = find_claim("C3");
  CHECK_THROWS_AS(expand_instances(c3, json{{"q", 9}, {"n", 1}}), ClaimError);
  CHECK_THROWS_AS(expand_instances(c3, json{{"q", 4}, {"n", 3}}), ClaimError);

  const Claim& c13 = find_claim("C13");
  CHECK_THROWS_AS(expand_instances(c13, json{{"family", "sp-cyclic"}, {"n", 3}, {"q", 2}}), ClaimError);
  CHECK(expand_instances(c13, json{{"family", "sl-affine"}, {"n", 3}, {"q", 2}}).size() == 1);

  const Claim& c15 = find_claim("C15");
  CHECK(expand_instances(c15, json{{"q", 2}, {"eps", "-"}}).front().at("eps") == -1);
  CHECK_THROWS_AS(expand_instances(c15, json{{"q", 2}, {"eps", 0}}), ClaimError);
}

TEST_CASE("C1 at q = 4") {
  RunContext ctx;
  const ClaimResult r = run_claim("C1", json{{"q", 4}}, ctx);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.evidence.at("mixed_generators") == json::array({52, 84, 126, 130}));
  CHECK(r.evidence.at("2(q^2-1)") == 30);
  CHECK(r.evidence.at("4(q+1)") == 20);
  for (u64 g : {52, 84, 126, 130}) {
    CHECK(g % 30 != 0);
    CHECK(g % 20 != 0);
  }
  const json j = r;
  CHECK(j.at("id") == "C1");
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("params") == json{{"q", 4}});
  CHECK(j.at("anchor") == find_claim("C1").anchor);
}

TEST_CASE("arithmetic and descriptor claims over their default grids") {
  RunContext ctx;
  for (const char* id : {"C1", "C2", "C3", "C7", "C12", "C15", "C16"}) {
    INFO(id);
    for (const auto& params : find_claim(id).grid) {
      const ClaimResult r = run_claim(id, params, ctx);
      CHECK(r.verdict == Verdict::Pass);
      CHECK_FALSE(r.evidence.contains("failures"));
    }
  }
  const ClaimResult z = run_claim("zsigmondy", json{{"q", 2}, {"n", 6}}, ctx);
  CHECK(z.verdict == Verdict::Pass);
  CHECK(z.evidence.at("prime").is_null());
  const ClaimResult c7 = run_claim("C7", json{{"q", 3}}, ctx);
  CHECK(c7.evidence.at("excluded") == json::array({2}));
}

TEST_CASE("zsigmondy claim evidence is independently checkable") {
  RunContext ctx;
  const ClaimResult r = run_claim("C12", json{{"q", 10}, {"n", 7}}, ctx);
  REQUIRE(r.verdict == Verdict::Pass);
  const u64 prime = parse_u128(r.evidence.at("prime").get<std::string>());
  CHECK(test::naive_is_prime(prime));
  CHECK(test::naive_primitive_divisor(10, 7, prime) == prime);
}

TEST_CASE("C9 fails at q = 3 with a genuine counterexample") {
  EnumerationStore store;
  RunContext ctx{&store};
  const ClaimResult r = run_claim("C9", json{{"q", 3}}, ctx);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.evidence.at("m") == 4);
  const auto& ce = r.evidence.at("counterexamples");
  REQUIRE(ce.size() >= 1);
  // Recheck on a fresh enumeration of PSp4(3).
  const Enumeration e = enumerate(classical_generators(parse_group_spec("C(2,3)u")));
  const auto z = center_of(e, classical_generators(parse_group_spec("C(2,3)u")));
  const ElementTable t = quotient_spectrum(e, z);
  for (const auto& x : ce) {
    const u64 order = x.at("order").get<u64>();
    CHECK(order % 4 == 0);
    CHECK(t.has_order(order));
  }
  CHECK(t.has_order(12));

  CHECK(run_claim("C9", json{{"q", 4}}, ctx).verdict == Verdict::Pass);
}

TEST_CASE("small oracle claims") {
  EnumerationStore store;
  RunContext ctx{&store};
  CHECK(run_claim("C8", json{{"n", 2}, {"q", 3}}, ctx).verdict == Verdict::Pass);
  CHECK(run_claim("C17", json{{"group", "A(1,4)s"}}, ctx).verdict == Verdict::Pass);
  CHECK(run_claim("C17", json{{"group", "C(2,3)s"}}, ctx).verdict == Verdict::Pass);
  for (const auto& params : find_claim("C13").grid) CHECK(run_claim("C13", params, ctx).verdict == Verdict::Pass);
  for (const auto& params : find_claim("C14").grid) CHECK(run_claim("C14", params, ctx).verdict == Verdict::Pass);
  CHECK_THROWS_AS(run_claim("C17", json{{"group", "nonsense"}}, ctx), std::invalid_argument);

  RunContext bare;
  CHECK_THROWS(run_claim("C8", json{{"n", 2}, {"q", 2}}, bare));
}

TEST_CASE("skipped claims") {
  RunContext ctx;
  for (const char* id : {"C10", "C11", "C18", "C19", "C20", "C21"}) {
    const ClaimResult r = run_claim(id, json::object(), ctx);
    CHECK(r.verdict == Verdict::Skipped);
    CHECK(r.evidence.at("reason") == find_claim(id).skip_reason);
  }
}

TEST_CASE("suite filters") {
  CHECK(ids_of(SuiteFilter::parse("arithmetic")) == std::vector<std::string>{"C2", "C3", "C12"});
  CHECK(contains_all(ids_of(SuiteFilter::parse("oracle")), {"C4", "C5", "C6", "C8", "C9"}));
  CHECK(ids_of(SuiteFilter::parse("all")).size() == 21);
  CHECK(ids_of(SuiteFilter::parse("")).empty());
  CHECK(ids_of(SuiteFilter::parse("C3,zsigmondy")) == std::vector<std::string>{"C3", "C12"});
  CHECK(ids_of(SuiteFilter::parse("skipped")) ==
        std::vector<std::string>{"C10", "C11", "C18", "C19", "C20", "C21"});
  CHECK_THROWS_AS(SuiteFilter::parse("C1,C77"), ClaimError);
  CHECK(parse_strategy("descriptor") == Strategy::Descriptor);
  CHECK_FALSE(parse_strategy("bogus").has_value());
}

TEST_CASE("suites are deterministic and summarised") {
  RunContext ctx;
  const auto a = run_suite(SuiteFilter::parse("arithmetic"), ctx);
  const auto b = run_suite(SuiteFilter::parse("arithmetic"), ctx);
  CHECK(json(a).dump() == json(b).dump());
  const SuiteSummary s = summarize(a);
  CHECK(s.pass == a.size());
  CHECK(s.fail == 0);

  const auto skipped = run_suite(SuiteFilter::parse("skipped"), ctx);
  CHECK(summarize(skipped).skipped == 6);
  CHECK(run_suite(SuiteFilter::parse(""), ctx).empty());

  // Oracle claims without a store become failures carrying the error.
  const auto broken = run_suite(SuiteFilter::parse("C8"), ctx);
  REQUIRE_FALSE(broken.empty());
  for (const auto& r : broken) {
    CHECK(r.verdict == Verdict::Fail);
    CHECK(r.evidence.contains("error"));
  }
}
