// Generating sets for the universal classical groups SL_n(q), SU_n(q) and
// Sp_2n(q) in their natural representations.
//
// Forms: Sp preserves J = [[0, K], [-K, 0]] (M^T J M = J) and SU preserves
// the Hermitian form K (M^T K M^sigma = K, sigma: a -> a^q on GF(q^2)),
// where K is the antidiagonal matrix of ones.

#ifndef OMEGA_CLASSICAL_HPP_
#define OMEGA_CLASSICAL_HPP_

#include "omega/matrix_group.hpp"

namespace omega {

/// Field of the natural module: GF(q) for A and C, GF(q^2) for 2A.
FieldPtr natural_field(const GroupSpec& spec);

/// Gram matrix of the preserved form (identity matrix for A).
Matrix natural_form(const GroupSpec& spec);

/// True when M lies in the universal group named by the GroupSpec.
bool preserves_form(const GroupSpec& spec, const Matrix& m);

/// The upper unitriangular matrices of the group, scanned in lexicographic
/// order, yield a greedy generating set of U; their transposes generate the
/// opposite unipotent subgroup, and together they generate the group.
/// Supports A, 2A and C. The returned group carries the universal spec.
MatrixGroup classical_generators(const GroupSpec& spec);

}  // namespace omega

#endif  // OMEGA_CLASSICAL_HPP_
