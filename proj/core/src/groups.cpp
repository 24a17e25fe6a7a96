#include "omega/groups.hpp"

#include <array>
#include <charconv>
#include <map>
#include <stdexcept>

namespace omega {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  unsigned fixed_rank;  // 0 for classical families
  unsigned min_rank;
};

constexpr std::array<FamilyInfo, 12> kFamilies{{
    {Family::A, "A", 0, 1},
    {Family::A2, "2A", 0, 2},
    {Family::B, "B", 0, 2},
    {Family::C, "C", 0, 2},
    {Family::D, "D", 0, 4},
    {Family::D2, "2D", 0, 4},
    {Family::D4_3, "3D4", 4, 4},
    {Family::G2, "G2", 2, 2},
    {Family::F4, "F4", 4, 4},
    {Family::E6, "E6", 6, 6},
    {Family::E6_2, "2E6", 6, 6},
    {Family::E7, "E7", 7, 7},
}};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies)
    if (fi.family == f) return fi;
  throw std::logic_error("unknown family");
}

const char* const kGrammar =
    "expected <family>(<rank>,<q>)[u|s] or <family>(<q>)[u|s] for 3D4, G2, F4, E6, 2E6, E7; "
    "families: A 2A B C D 2D 3D4 G2 F4 E6 2E6 E7";

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw std::invalid_argument("invalid group spec '" + std::string(text) + "': " + why + " (" +
                              kGrammar + ")");
}

u64 parse_number(std::string_view text, std::string_view token) {
  u64 v = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (token.empty() || ec != std::errc() || ptr != last) parse_fail(text, "bad number '" + std::string(token) + "'");
  return v;
}

// q^i - 1 contributes Phi_d for every d | i.
void add_minus(std::map<unsigned, unsigned>& c, unsigned i) {
  for (unsigned d = 1; d <= i; ++d)
    if (i % d == 0) ++c[d];
}

// q^i + 1 contributes Phi_d for every d | 2i with d not dividing i.
void add_plus(std::map<unsigned, unsigned>& c, unsigned i) {
  for (unsigned d = 1; d <= 2 * i; ++d)
    if ((2 * i) % d == 0 && i % d != 0) ++c[d];
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

bool is_exceptional(Family f) { return info(f).fixed_rank != 0; }

bool has_fixed_rank(Family f) { return info(f).fixed_rank != 0; }

int GroupSpec::epsilon() const {
  switch (family) {
    case Family::A2:
    case Family::D2:
    case Family::E6_2: return -1;
    default: return 1;
  }
}

u64 GroupSpec::center_order() const {
  switch (family) {
    case Family::A: return gcd(u64{rank} + 1, q - 1);
    case Family::A2: return gcd(u64{rank} + 1, q + 1);
    case Family::B:
    case Family::C:
    case Family::E7: return gcd(u64{2}, q - 1);
    case Family::D: return gcd(u64{4}, (pow_mod(q, rank, 4) + 3) % 4);
    case Family::D2: return gcd(u64{4}, (pow_mod(q, rank, 4) + 1) % 4);
    case Family::E6: return gcd(u64{3}, q - 1);
    case Family::E6_2: return gcd(u64{3}, q + 1);
    default: return 1;
  }
}

unsigned GroupSpec::natural_dimension() const {
  switch (family) {
    case Family::A:
    case Family::A2: return rank + 1;
    case Family::B: return 2 * rank + 1;
    case Family::C:
    case Family::D:
    case Family::D2: return 2 * rank;
    default: throw std::invalid_argument("natural_dimension: exceptional family");
  }
}

GroupSpec make_group_spec(Family family, unsigned rank, u64 q, Version version) {
  const FamilyInfo& fi = info(family);
  if (fi.fixed_rank != 0 && rank != fi.fixed_rank)
    throw std::invalid_argument("rank " + std::to_string(rank) + " inconsistent with family " +
                                std::string(fi.name));
  if (rank < fi.min_rank)
    throw std::invalid_argument("family " + std::string(fi.name) + " requires rank >= " +
                                std::to_string(fi.min_rank));
  const auto pk = prime_power_decomposition(q);
  if (!pk) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  GroupSpec s;
  s.family = family;
  s.rank = rank;
  s.q = q;
  s.p = pk->first;
  s.k = pk->second;
  s.version = version;
  return s;
}

GroupSpec parse_group_spec(std::string_view text) {
  const auto open = text.find('(');
  const auto close = text.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    parse_fail(text, "missing parentheses");
  const std::string_view fam = text.substr(0, open);
  const FamilyInfo* fi = nullptr;
  for (const auto& f : kFamilies)
    if (f.name == fam) fi = &f;
  if (fi == nullptr) parse_fail(text, "unknown family '" + std::string(fam) + "'");

  const std::string_view args = text.substr(open + 1, close - open - 1);
  const std::string_view suffix = text.substr(close + 1);
  Version version = Version::Simple;
  if (suffix == "u")
    version = Version::Universal;
  else if (suffix == "s" || suffix.empty())
    version = Version::Simple;
  else
    parse_fail(text, "unknown version '" + std::string(suffix) + "'");

  unsigned rank = fi->fixed_rank;
  u64 q = 0;
  const auto comma = args.find(',');
  if (fi->fixed_rank != 0) {
    if (comma != std::string_view::npos) parse_fail(text, "rank is implied by family " + std::string(fi->name));
    q = parse_number(text, args);
  } else {
    if (comma == std::string_view::npos) parse_fail(text, "family " + std::string(fi->name) + " needs a rank");
    const u64 r = parse_number(text, args.substr(0, comma));
    if (r > 1000) parse_fail(text, "rank too large");
    rank = static_cast<unsigned>(r);
    q = parse_number(text, args.substr(comma + 1));
  }
  try {
    return make_group_spec(fi->family, rank, q, version);
  } catch (const std::invalid_argument& e) {
    parse_fail(text, e.what());
  }
}

std::string to_string(const GroupSpec& spec) {
  std::string s(family_name(spec.family));
  s += '(';
  if (!has_fixed_rank(spec.family)) s += std::to_string(spec.rank) + ",";
  s += std::to_string(spec.q);
  s += ')';
  s += spec.version == Version::Universal ? 'u' : 's';
  return s;
}

std::string display_name(const GroupSpec& spec) {
  const bool u = spec.version == Version::Universal;
  const std::string q = "(" + std::to_string(spec.q) + ")";
  const unsigned n = spec.rank;
  switch (spec.family) {
    case Family::A: return (u ? "SL" : "PSL") + std::to_string(n + 1) + q;
    case Family::A2: return (u ? "SU" : "PSU") + std::to_string(n + 1) + q;
    case Family::B: return (u ? "Spin" : "O") + std::to_string(2 * n + 1) + q;
    case Family::C: return (u ? "Sp" : "PSp") + std::to_string(2 * n) + q;
    case Family::D: return (u ? "Spin+" : "O+") + std::to_string(2 * n) + q;
    case Family::D2: return (u ? "Spin-" : "O-") + std::to_string(2 * n) + q;
    default: return std::string(family_name(spec.family)) + q + (u ? "_u" : "");
  }
}

OrderPolynomial order_polynomial(Family family, unsigned n) {
  std::map<unsigned, unsigned> c;
  OrderPolynomial op;
  switch (family) {
    case Family::A:
      op.q_exponent = n * (n + 1) / 2;
      for (unsigned i = 2; i <= n + 1; ++i) add_minus(c, i);
      break;
    case Family::A2:
      op.q_exponent = n * (n + 1) / 2;
      for (unsigned i = 2; i <= n + 1; ++i) {
        if (i % 2 == 0)
          add_minus(c, i);
        else
          add_plus(c, i);
      }
      break;
    case Family::B:
    case Family::C:
      op.q_exponent = n * n;
      for (unsigned i = 1; i <= n; ++i) add_minus(c, 2 * i);
      break;
    case Family::D:
    case Family::D2:
      op.q_exponent = n * (n - 1);
      if (family == Family::D)
        add_minus(c, n);
      else
        add_plus(c, n);
      for (unsigned i = 1; i < n; ++i) add_minus(c, 2 * i);
      break;
    case Family::D4_3:
      op.q_exponent = 12;
      ++c[3];
      ++c[6];
      ++c[12];  // q^8 + q^4 + 1
      add_minus(c, 6);
      add_minus(c, 2);
      break;
    case Family::G2:
      op.q_exponent = 6;
      add_minus(c, 6);
      add_minus(c, 2);
      break;
    case Family::F4:
      op.q_exponent = 24;
      for (unsigned i : {12u, 8u, 6u, 2u}) add_minus(c, i);
      break;
    case Family::E6:
      op.q_exponent = 36;
      for (unsigned i : {12u, 9u, 8u, 6u, 5u, 2u}) add_minus(c, i);
      break;
    case Family::E6_2:
      op.q_exponent = 36;
      for (unsigned i : {12u, 8u, 6u, 2u}) add_minus(c, i);
      add_plus(c, 9);
      add_plus(c, 5);
      break;
    case Family::E7:
      op.q_exponent = 63;
      for (unsigned i : {18u, 14u, 12u, 10u, 8u, 6u, 2u}) add_minus(c, i);
      break;
  }
  for (auto [d, e] : c) op.cyclotomic.emplace_back(d, e);
  return op;
}

Factored group_order(const GroupSpec& spec) {
  const OrderPolynomial op = order_polynomial(spec.family, spec.rank);
  Factored order = Factored::from_factors({{spec.p, spec.k * op.q_exponent}});
  for (auto [d, e] : op.cyclotomic) {
    const std::optional<u128> v = cyclotomic_value(d, spec.q);
    if (!v || *v > kMaxFactorable)
      throw std::overflow_error("group_order: Phi_" + std::to_string(d) + "(" + std::to_string(spec.q) +
                                ") exceeds 2^63 - 1");
    const Factored f = factorize(static_cast<u64>(*v));
    for (unsigned i = 0; i < e; ++i) order *= f;
  }
  if (spec.version == Version::Simple) order = order.divided_by(factorize(spec.center_order()));
  return order;
}

}  // namespace omega
