// Explicit Frobenius subgroups of classical groups and an exhaustive
// verifier for the Frobenius property.

#ifndef OMEGA_FROBENIUS_HPP_
#define OMEGA_FROBENIUS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/matrix_group.hpp"

namespace omega {

enum class FrobeniusKind {
  SlAffine,  // SL_n(q): kernel q^{n-1}, complement (q^{n-1}-1)_{(n,q-1)'}
  SlLine,    // SL_n(q), 1 <= k < n-1: kernel q^k, complement q^k - 1
  SpCyclic,  // Sp_2n(q), q even, n a power of 2: kernel q^n + 1, complement 2n
};

std::string_view to_string(FrobeniusKind kind);
/// Accepts "sl-affine", "sl-line", "sp-cyclic".
FrobeniusKind parse_frobenius_kind(std::string_view text);

struct FrobeniusWitness {
  FrobeniusKind kind = FrobeniusKind::SlAffine;
  unsigned n = 0;
  u64 q = 0;
  unsigned k = 0;
  GroupSpec ambient;  // universal group containing the witness
  std::vector<Matrix> kernel_gens;
  std::vector<Matrix> complement_gens;
  u64 kernel_order = 0;      // claimed
  u64 complement_order = 0;  // claimed
};

/// Companion matrix of the smallest primitive polynomial of degree k over
/// GF(q); it generates a Singer cycle of order q^k - 1 in GL_k(q).
Matrix singer_cycle(const FieldPtr& field, unsigned k);

/// Builds the witness. SlAffine and SlLine are explicit block matrices;
/// SpCyclic searches an enumeration of Sp_2n(q) (built when `ambient` is
/// null) for an element a of order q^n + 1 and then for b of order 2n
/// normalising <a> and acting on it fixed-point-freely. Throws
/// std::invalid_argument on bad parameters and std::runtime_error when the
/// search fails.
FrobeniusWitness frobenius_witness(FrobeniusKind kind, unsigned n, u64 q, unsigned k = 0,
                                   const Enumeration* ambient = nullptr, u64 cap = kDefaultEnumerationCap);

struct FrobeniusVerdict {
  bool pass = false;
  u64 kernel_order = 0;
  u64 complement_order = 0;
  bool complement_cyclic = false;
  std::string reason;  // empty on pass
  std::optional<std::pair<Matrix, Matrix>> counterexample;
};

/// K = <kernel_gens>, C = <complement_gens>. Passes when C normalises K,
/// K and C meet trivially, and no nontrivial c in C commutes with a
/// nontrivial k in K. Both closures are capped at 2^20 elements.
FrobeniusVerdict verify_frobenius(const std::vector<Matrix>& kernel_gens, const std::vector<Matrix>& complement_gens);

}  // namespace omega

#endif  // OMEGA_FROBENIUS_HPP_
