// Divisor-closed sets of element orders held by their maximal elements,
// closed-form spectra, and prime graphs.

#ifndef OMEGA_SPECTRA_HPP_
#define OMEGA_SPECTRA_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/arith.hpp"
#include "omega/groups.hpp"

namespace omega {

enum class SpectrumScope { Full, PPrimeOnly, MixedOnly };

std::string_view to_string(SpectrumScope scope);
SpectrumScope parse_spectrum_scope(std::string_view text);

/// The set of all divisors of `generators`. Generators form a divisibility
/// antichain sorted ascending; an empty list represents the empty set.
class SpectrumDescriptor {
public:
  SpectrumDescriptor() = default;

  const std::vector<u64>& generators() const& { return generators_; }
  std::vector<u64> generators() && { return std::move(generators_); }
  SpectrumScope scope() const { return scope_; }
  const std::optional<GroupSpec>& context() const { return context_; }
  const std::string& note() const { return note_; }

  bool empty() const { return generators_.empty(); }

  /// m >= 1 lies in the set iff it divides some generator.
  bool contains(u64 m) const;

  /// Largest element of the set (the lcm is not generally a member).
  u64 max_element() const;

  /// All members, ascending. Intended for small sets only.
  std::vector<u64> elements() const;

  SpectrumDescriptor with_scope(SpectrumScope scope) const;
  SpectrumDescriptor with_context(const GroupSpec& spec) const;
  SpectrumDescriptor with_note(std::string note) const;

  friend bool operator==(const SpectrumDescriptor& a, const SpectrumDescriptor& b) {
    return a.generators_ == b.generators_ && a.scope_ == b.scope_;
  }

private:
  friend SpectrumDescriptor canonicalize(std::vector<u64>, SpectrumScope);
  friend SpectrumDescriptor empty_descriptor(SpectrumScope);

  std::vector<u64> generators_;
  SpectrumScope scope_ = SpectrumScope::Full;
  std::optional<GroupSpec> context_;
  std::string note_;
};

/// Drops every value that divides another value and sorts. Throws
/// std::invalid_argument on an empty list or a zero.
SpectrumDescriptor canonicalize(std::vector<u64> values,
                                SpectrumScope scope = SpectrumScope::Full);

SpectrumDescriptor empty_descriptor(SpectrumScope scope);

/// Free-function form of SpectrumDescriptor::contains.
bool contains(const SpectrumDescriptor& desc, u64 m);

struct CharacteristicSplit {
  u64 p_exponent = 1;           // largest power of p in the set
  SpectrumDescriptor p_prime;   // members coprime to p
  SpectrumDescriptor mixed;     // members divisible by p that are not p-powers
};

/// Splits a full spectrum at the prime p. Throws std::invalid_argument if p
/// is not prime or desc is not a full spectrum.
CharacteristicSplit split_by_characteristic(const SpectrumDescriptor& desc, u64 p);

/// Semisimple spectrum of the simple group E6(q) (eps = +1) or 2E6(q)
/// (eps = -1), from the nine generating numbers with d = (3, q - eps).
SpectrumDescriptor e6_semisimple_spectrum(u64 q, int eps);

/// Semisimple spectrum of the universal group E7(q)_u.
SpectrumDescriptor e7_semisimple_spectrum(u64 q);

/// Mixed orders of 3D4(q) for even q: divisors of 2(q^3+1), 2(q^3-1),
/// 4(q^2+q+1), 4(q^2-q+1). Throws std::invalid_argument for odd q.
SpectrumDescriptor d43_mixed_spectrum(u64 q);

/// Semisimple spectrum of Sp_{2n}(q) from its maximal tori: every signed
/// partition n = n_1 + ... + n_k contributes lcm(q^{n_i} - eps_i).
SpectrumDescriptor symplectic_torus_spectrum(unsigned n, u64 q);

/// Closed-form semisimple spectrum for a group spec when one is available:
/// E6, 2E6 (simple), E7 (universal), C (universal) and B (delegated to C).
/// Throws std::invalid_argument otherwise.
SpectrumDescriptor closed_form_semisimple_spectrum(const GroupSpec& spec);

class PrimeGraph {
public:
  PrimeGraph() = default;
  PrimeGraph(std::vector<u64> vertices, std::vector<std::pair<u64, u64>> edges);

  const std::vector<u64>& vertices() const& { return vertices_; }
  std::vector<u64> vertices() && { return std::move(vertices_); }
  /// Each edge (r, t) has r < t; sorted.
  const std::vector<std::pair<u64, u64>>& edges() const& { return edges_; }
  std::vector<std::pair<u64, u64>> edges() && { return std::move(edges_); }
  bool adjacent(u64 r, u64 t) const;
  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<u64>> components() const;

  friend bool operator==(const PrimeGraph&, const PrimeGraph&) = default;

private:
  std::vector<u64> vertices_;
  std::vector<std::pair<u64, u64>> edges_;
};

/// Vertices are the primes dividing some member; r ~ t iff rt is a member.
/// Accepts Full and PPrimeOnly descriptors (the latter yields the graph
/// induced on non-characteristic primes).
PrimeGraph prime_graph(const SpectrumDescriptor& desc);

/// Same graph restricted to the given vertex set.
PrimeGraph induced_subgraph(const PrimeGraph& graph, const std::vector<u64>& vertices);

/// For every vertex r the smallest t != r not adjacent to r, or nullopt when
/// r is adjacent to every other vertex.
std::map<u64, std::optional<u64>> pg_nonadjacency_witnesses(const PrimeGraph& graph);

}  // namespace omega

#endif  // OMEGA_SPECTRA_HPP_
