#include "omega/spectra.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace omega {

namespace {

u64 to_u64(i128 v, const char* what) {
  if (v <= 0 || v > static_cast<i128>(~u64{0}))
    throw std::overflow_error(std::string(what) + ": value out of 64-bit range");
  return static_cast<u64>(v);
}

i128 ipow(u64 q, unsigned e) {
  i128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, static_cast<i128>(q), &r)) throw std::overflow_error("closed form: q too large");
  }
  return r;
}

i128 mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("closed form: q too large");
  return r;
}

u64 exact_div(i128 v, u64 d, const char* what) {
  if (v % static_cast<i128>(d) != 0) throw std::logic_error(std::string(what) + ": inexact division");
  return to_u64(v / static_cast<i128>(d), what);
}

void require_prime_power(u64 q, const char* what) {
  if (q < 2 || !prime_power_decomposition(q))
    throw std::invalid_argument(std::string(what) + ": q must be a prime power >= 2");
}

}  // namespace

std::string_view to_string(SpectrumScope scope) {
  switch (scope) {
    case SpectrumScope::Full: return "full";
    case SpectrumScope::PPrimeOnly: return "p_prime_only";
    case SpectrumScope::MixedOnly: return "mixed_only";
  }
  return "?";
}

SpectrumScope parse_spectrum_scope(std::string_view text) {
  if (text == "full") return SpectrumScope::Full;
  if (text == "p_prime_only") return SpectrumScope::PPrimeOnly;
  if (text == "mixed_only") return SpectrumScope::MixedOnly;
  throw std::invalid_argument("unknown spectrum scope '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// SpectrumDescriptor

bool SpectrumDescriptor::contains(u64 m) const {
  if (m == 0) throw std::invalid_argument("contains: m must be positive");
  return std::any_of(generators_.begin(), generators_.end(), [m](u64 g) { return g % m == 0; });
}

u64 SpectrumDescriptor::max_element() const {
  if (generators_.empty()) throw std::logic_error("max_element: empty descriptor");
  return generators_.back();
}

std::vector<u64> SpectrumDescriptor::elements() const {
  std::set<u64> out;
  for (u64 g : generators_) {
    for (u64 d = 1; d * d <= g; ++d) {
      if (g % d == 0) {
        out.insert(d);
        out.insert(g / d);
      }
    }
  }
  return {out.begin(), out.end()};
}

SpectrumDescriptor SpectrumDescriptor::with_scope(SpectrumScope scope) const {
  SpectrumDescriptor d = *this;
  d.scope_ = scope;
  return d;
}

SpectrumDescriptor SpectrumDescriptor::with_context(const GroupSpec& spec) const {
  SpectrumDescriptor d = *this;
  d.context_ = spec;
  return d;
}

SpectrumDescriptor SpectrumDescriptor::with_note(std::string note) const {
  SpectrumDescriptor d = *this;
  d.note_ = std::move(note);
  return d;
}

SpectrumDescriptor canonicalize(std::vector<u64> values, SpectrumScope scope) {
  if (values.empty()) throw std::invalid_argument("canonicalize: empty input");
  if (std::find(values.begin(), values.end(), u64{0}) != values.end())
    throw std::invalid_argument("canonicalize: zero is not an element order");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<u64> kept;
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < values.size() && maximal; ++j)
      if (values[j] % values[i] == 0) maximal = false;
    if (maximal) kept.push_back(values[i]);
  }
  SpectrumDescriptor d;
  d.generators_ = std::move(kept);
  d.scope_ = scope;
  return d;
}

SpectrumDescriptor empty_descriptor(SpectrumScope scope) {
  SpectrumDescriptor d;
  d.scope_ = scope;
  return d;
}

bool contains(const SpectrumDescriptor& desc, u64 m) { return desc.contains(m); }

CharacteristicSplit split_by_characteristic(const SpectrumDescriptor& desc, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("split_by_characteristic: p must be prime");
  if (desc.scope() != SpectrumScope::Full)
    throw std::invalid_argument("split_by_characteristic: descriptor must be a full spectrum");
  CharacteristicSplit out;
  std::vector<u64> coprime, mixed;
  for (u64 g : desc.generators()) {
    const RPart parts = r_part(g, p);
    out.p_exponent = std::max(out.p_exponent, parts.r_part);
    coprime.push_back(parts.r_prime_part);
    // A generator that is mixed is maximal in the mixed subset; every mixed
    // member divides such a generator.
    if (parts.r_part > 1 && parts.r_prime_part > 1) mixed.push_back(g);
  }
  out.p_prime = canonicalize(coprime, SpectrumScope::PPrimeOnly);
  out.mixed = mixed.empty() ? empty_descriptor(SpectrumScope::MixedOnly)
                            : canonicalize(mixed, SpectrumScope::MixedOnly);
  if (desc.context()) {
    out.p_prime = out.p_prime.with_context(*desc.context());
    out.mixed = out.mixed.with_context(*desc.context());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms

SpectrumDescriptor e6_semisimple_spectrum(u64 q, int eps) {
  require_prime_power(q, "e6_semisimple_spectrum");
  if (eps != 1 && eps != -1) throw std::invalid_argument("e6_semisimple_spectrum: eps must be +1 or -1");
  const i128 Q = q, e = eps;
  const u64 d = gcd(u64{3}, eps == 1 ? q - 1 : q + 1);
  const char* what = "e6_semisimple_spectrum";
  const i128 q2 = ipow(q, 2), q3 = ipow(q, 3), q4 = ipow(q, 4), q5 = ipow(q, 5), q6 = ipow(q, 6);
  std::vector<u64> v{
      exact_div(q6 + e * q3 + 1, d, what),
      exact_div(mul(q4 - q2 + 1, q2 + e * Q + 1), d, what),
      exact_div(mul(q5 - e, Q + e), d, what),
      to_u64(q5 - e, what),
      exact_div(mul(q4 + 1, q2 - 1), d, what),
      exact_div(q6 - 1, d, what),
      to_u64(mul(q3 - e, Q + e), what),
      exact_div(mul(q4 - 1, q2 - e * Q + 1), d, what),
      to_u64(q4 - 1, what),
  };
  const Family fam = eps == 1 ? Family::E6 : Family::E6_2;
  return canonicalize(std::move(v), SpectrumScope::PPrimeOnly)
      .with_context(make_group_spec(fam, 6, q, Version::Simple));
}

SpectrumDescriptor e7_semisimple_spectrum(u64 q) {
  require_prime_power(q, "e7_semisimple_spectrum");
  const char* what = "e7_semisimple_spectrum";
  const i128 Q = q;
  const i128 q2 = ipow(q, 2), q3 = ipow(q, 3), q4 = ipow(q, 4), q5 = ipow(q, 5), q6 = ipow(q, 6),
             q7 = ipow(q, 7);
  const u64 two = gcd(u64{2}, q - 1);
  std::vector<u64> v;
  for (const i128 e : {i128{1}, i128{-1}}) {
    v.push_back(to_u64(mul(q6 + e * q3 + 1, Q - e), what));
    v.push_back(to_u64(q7 - e, what));
    v.push_back(to_u64(mul(q4 - q2 + 1, q3 - e), what));
    v.push_back(to_u64(mul(q5 - e, q2 + e * Q + 1), what));
    v.push_back(to_u64(mul(q5 - e, Q + e), what));
    v.push_back(exact_div(mul(mul(q4 + 1, q2 + 1), Q - e), two, what));
    v.push_back(to_u64(mul(q4 + 1, q2 - 1), what));
    v.push_back(to_u64(mul(q4 - 1, q2 + e * Q + 1), what));
    v.push_back(to_u64(q6 - 1, what));
  }
  return canonicalize(std::move(v), SpectrumScope::PPrimeOnly)
      .with_context(make_group_spec(Family::E7, 7, q, Version::Universal));
}

SpectrumDescriptor d43_mixed_spectrum(u64 q) {
  require_prime_power(q, "d43_mixed_spectrum");
  if (q % 2 != 0) throw std::invalid_argument("d43_mixed_spectrum: only even q is supported");
  const char* what = "d43_mixed_spectrum";
  const i128 Q = q, q2 = ipow(q, 2), q3 = ipow(q, 3);
  std::vector<u64> v{
      to_u64(mul(2, q3 + 1), what),
      to_u64(mul(2, q3 - 1), what),
      to_u64(mul(4, q2 + Q + 1), what),
      to_u64(mul(4, q2 - Q + 1), what),
  };
  return canonicalize(std::move(v), SpectrumScope::MixedOnly)
      .with_context(make_group_spec(Family::D4_3, 4, q, Version::Simple));
}

SpectrumDescriptor symplectic_torus_spectrum(unsigned n, u64 q) {
  require_prime_power(q, "symplectic_torus_spectrum");
  if (n < 2) throw std::invalid_argument("symplectic_torus_spectrum: n must be >= 2");
  if (n > 64) throw std::invalid_argument("symplectic_torus_spectrum: n too large");
  // cyclic[m][0] = q^m - 1, cyclic[m][1] = q^m + 1
  std::vector<std::array<u64, 2>> cyclic(n + 1);
  for (unsigned m = 1; m <= n; ++m) {
    const u64 qm = checked_pow(q, m);
    if (qm == ~u64{0}) throw std::overflow_error("symplectic_torus_spectrum: overflow");
    cyclic[m] = {qm - 1, qm + 1};
  }
  std::set<u64> orders;
  // Signed parts are encoded as 2*m + sign_bit and generated non-increasing.
  std::function<void(unsigned, unsigned, u64)> rec = [&](unsigned remaining, unsigned max_code, u64 acc) {
    if (remaining == 0) {
      orders.insert(acc);
      return;
    }
    for (unsigned code = std::min(max_code, 2 * remaining + 1); code >= 2; --code) {
      const unsigned m = code / 2;
      if (m > remaining) continue;
      rec(remaining - m, code, lcm(acc, cyclic[m][code % 2]));
    }
  };
  rec(n, 2 * n + 1, 1);
  return canonicalize({orders.begin(), orders.end()}, SpectrumScope::PPrimeOnly)
      .with_context(make_group_spec(Family::C, n, q, Version::Universal));
}

SpectrumDescriptor closed_form_semisimple_spectrum(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::E6:
    case Family::E6_2: {
      auto d = e6_semisimple_spectrum(spec.q, spec.epsilon());
      if (spec.version == Version::Universal)
        d = d.with_note("descriptor of the simple group; the universal group is not covered");
      return d;
    }
    case Family::E7: {
      auto d = e7_semisimple_spectrum(spec.q);
      if (spec.version == Version::Simple)
        d = d.with_note("descriptor of the universal group E7(q)_u; centre adjustment not applied");
      return d;
    }
    case Family::C: {
      auto d = symplectic_torus_spectrum(spec.rank, spec.q);
      if (spec.version == Version::Simple)
        d = d.with_note("descriptor of the universal group Sp" + std::to_string(2 * spec.rank) + "(" +
                        std::to_string(spec.q) + ")");
      return d;
    }
    case Family::B: {
      auto d = symplectic_torus_spectrum(spec.rank, spec.q);
      return d.with_note("delegated to C(" + std::to_string(spec.rank) + "," + std::to_string(spec.q) +
                         ")u: B and C share maximal torus types");
    }
    default:
      throw std::invalid_argument("no closed-form semisimple spectrum for " + to_string(spec));
  }
}

// ---------------------------------------------------------------------------
// Prime graphs

PrimeGraph::PrimeGraph(std::vector<u64> vertices, std::vector<std::pair<u64, u64>> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (auto& e : edges) {
    if (e.first == e.second) throw std::invalid_argument("PrimeGraph: loop edge");
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!std::binary_search(vertices.begin(), vertices.end(), e.first) ||
        !std::binary_search(vertices.begin(), vertices.end(), e.second))
      throw std::invalid_argument("PrimeGraph: edge endpoint is not a vertex");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  vertices_ = std::move(vertices);
  edges_ = std::move(edges);
}

bool PrimeGraph::adjacent(u64 r, u64 t) const {
  if (r > t) std::swap(r, t);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(r, t));
}

std::vector<std::vector<u64>> PrimeGraph::components() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  auto index = [&](u64 v) {
    return static_cast<std::size_t>(std::lower_bound(vertices_.begin(), vertices_.end(), v) - vertices_.begin());
  };
  for (const auto& [a, b] : edges_) {
    const std::size_t ra = find(index(a)), rb = find(index(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::size_t, std::vector<u64>> groups;
  for (std::size_t i = 0; i < vertices_.size(); ++i) groups[find(i)].push_back(vertices_[i]);
  std::vector<std::vector<u64>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

PrimeGraph prime_graph(const SpectrumDescriptor& desc) {
  if (desc.scope() == SpectrumScope::MixedOnly)
    throw std::invalid_argument("prime_graph: mixed-only descriptors do not determine a prime graph");
  std::set<u64> primes;
  for (u64 g : desc.generators())
    for (u64 p : factorize(g).primes()) primes.insert(p);
  std::vector<u64> vertices(primes.begin(), primes.end());
  std::vector<std::pair<u64, u64>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (desc.contains(vertices[i] * vertices[j])) edges.emplace_back(vertices[i], vertices[j]);
  return PrimeGraph(std::move(vertices), std::move(edges));
}

PrimeGraph induced_subgraph(const PrimeGraph& graph, const std::vector<u64>& keep) {
  std::vector<u64> vertices;
  for (u64 v : graph.vertices())
    if (std::find(keep.begin(), keep.end(), v) != keep.end()) vertices.push_back(v);
  std::vector<std::pair<u64, u64>> edges;
  for (const auto& e : graph.edges())
    if (std::find(vertices.begin(), vertices.end(), e.first) != vertices.end() &&
        std::find(vertices.begin(), vertices.end(), e.second) != vertices.end())
      edges.push_back(e);
  return PrimeGraph(std::move(vertices), std::move(edges));
}

std::map<u64, std::optional<u64>> pg_nonadjacency_witnesses(const PrimeGraph& graph) {
  std::map<u64, std::optional<u64>> out;
  for (u64 r : graph.vertices()) {
    std::optional<u64> witness;
    for (u64 t : graph.vertices()) {
      if (t != r && !graph.adjacent(r, t)) {
        witness = t;
        break;
      }
    }
    out[r] = witness;
  }
  return out;
}

}  // namespace omega
