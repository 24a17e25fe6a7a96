// Modules for matrix groups and spectra of split extensions V:S.
//
// S acts on column vectors, v -> A_s v, and (v, s)(w, t) = (v + A_s w, st).
// Then (v, s)^m = (N_s v, s^m) with N_s = I + A_s + ... + A_s^{m-1}, so for
// |s| = m the element (v, s) has order m when N_s v = 0 and r*m otherwise,
// r being the characteristic of V.

#ifndef OMEGA_MODULE_HPP_
#define OMEGA_MODULE_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "omega/matrix_group.hpp"

namespace omega {

/// The images do not define a homomorphism of the source group.
class InconsistentAction : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ModuleAction {
  MatrixGroup group;
  std::vector<Matrix> images;  // one per generator of `group`

  const FieldPtr& module_field() const { return images.front().field(); }
  unsigned dim_v() const { return images.front().dim(); }
  u64 characteristic() const { return module_field()->characteristic(); }
  /// True when every image equals its generator (V is the natural module).
  bool is_natural() const;
  /// Shape checks only: image count, one field and dimension, invertibility.
  /// Throws std::invalid_argument.
  void check_shape() const;
};

/// V = the natural module of a matrix group.
ModuleAction natural_module(const MatrixGroup& group);

/// Permutations of {1..m} (one-line notation, 1-based) acting on GF(r)^m by
/// permutation matrices, P e_i = e_{pi(i)}. The source group is realised by
/// the same permutation matrices over GF(2). m <= 64.
ModuleAction permutation_module(const std::vector<std::vector<unsigned>>& perms, u64 r);

/// Image of a word in the generators; entry i >= 0 is generator i and
/// entry -(i+1) its inverse.
Matrix image_of_word(const ModuleAction& action, const std::vector<int>& word);
Matrix source_of_word(const ModuleAction& action, const std::vector<int>& word);

unsigned fixed_space_dim(const ModuleAction& action, const std::vector<int>& word);
unsigned min_poly_degree(const ModuleAction& action, const std::vector<int>& word);

/// Closure of the pairs (g, image(g)). Its size equals |S| exactly when the
/// images define a homomorphism; otherwise InconsistentAction is thrown.
/// For the natural module the closure of S itself is returned.
Enumeration enumerate_action(const ModuleAction& action, u64 cap = kDefaultEnumerationCap);

/// A coset element (v, s) of the given order.
struct CosetWitness {
  u64 element = 0;  // index of s in the enumeration
  Matrix s;         // source matrix
  Matrix image;     // A_s
  std::vector<Code> v;
  u64 s_order = 0;
  u64 order = 0;
};

struct SemidirectResult {
  u64 r = 0;            // characteristic of V
  ElementTable source;  // spectrum of S
  ElementTable table;   // spectrum of V:S, histogram over all |V||S| elements
  std::map<u64, CosetWitness> witnesses;  // one per order of V:S
};

/// Spectrum of V:S from an enumeration produced by enumerate_action (the
/// module image is its last block).
SemidirectResult semidirect_spectrum(const Enumeration& joint, unsigned threads = 0);
SemidirectResult semidirect_spectrum(const ModuleAction& action, u64 cap = kDefaultEnumerationCap);

/// Order of (v, s) computed independently as the order of the affine matrix
/// [[A_s, v], [0, 1]] of size dim + 1.
u64 affine_order(const Matrix& image, const std::vector<Code>& v, u64 bound);

/// First element (in enumeration order) whose image fixes no nonzero vector.
std::optional<u64> find_fixed_point_free(const Enumeration& joint);

}  // namespace omega

#endif  // OMEGA_MODULE_HPP_
