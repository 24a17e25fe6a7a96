// Symbolic identities of finite groups of Lie type and their orders.
//
// Wire format: <family>(<rank>,<q>)[u|s] for classical families and
// <family>(<q>)[u|s] for 3D4, G2, F4, E6, 2E6, E7. Version defaults to s.
//
//   O_{2n+1}(q) = B(n,q)s    S_{2n}(q) = C(n,q)s
//   O+_{2n}(q)  = D(n,q)s    O-_{2n}(q) = 2D(n,q)s
//   L_{n+1}(q)  = A(n,q)s    U_{n+1}(q) = 2A(n,q)s

#ifndef OMEGA_GROUPS_HPP_
#define OMEGA_GROUPS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "omega/arith.hpp"

namespace omega {

enum class Family { A, A2, B, C, D, D2, D4_3, G2, F4, E6, E6_2, E7 };
enum class Version { Universal, Simple };

std::string_view family_name(Family f);
bool is_exceptional(Family f);
/// True for the families whose rank is implied by the name.
bool has_fixed_rank(Family f);

struct GroupSpec {
  Family family = Family::A;
  unsigned rank = 1;
  u64 q = 2;
  u64 p = 2;       // characteristic
  unsigned k = 1;  // q = p^k
  Version version = Version::Simple;

  /// +1 for untwisted families, -1 for 2A, 2D and 2E6.
  int epsilon() const;
  /// Order of the centre of the universal group; the simple group is the
  /// quotient by it.
  u64 center_order() const;
  /// Dimension of the natural matrix representation (A, 2A, B, C, D, 2D).
  unsigned natural_dimension() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Validates and fills in p and k. Throws std::invalid_argument.
GroupSpec make_group_spec(Family family, unsigned rank, u64 q,
                          Version version = Version::Simple);

/// Parses the wire format. Throws std::invalid_argument with a message that
/// names the grammar.
GroupSpec parse_group_spec(std::string_view text);

/// Canonical wire format, e.g. "C(2,4)u", "E7(2)s".
std::string to_string(const GroupSpec& spec);

/// Human-readable classical name, e.g. "Sp4(4)", "PSp4(3)", "SU3(3)".
std::string display_name(const GroupSpec& spec);

/// |G| = q^{q_exponent} * prod Phi_d(q)^{e_d}, before quotienting by the centre.
struct OrderPolynomial {
  unsigned q_exponent = 0;
  std::vector<std::pair<unsigned, unsigned>> cyclotomic;  // (d, e_d), d ascending
};

OrderPolynomial order_polynomial(Family family, unsigned rank);

/// |G| in factored form. For Version::Simple the universal order is divided
/// by center_order(). Orders beyond 2^63 stay exact; Factored::value() then
/// reports nullopt. Throws std::overflow_error only when a single cyclotomic
/// value exceeds 2^63.
Factored group_order(const GroupSpec& spec);

}  // namespace omega

#endif  // OMEGA_GROUPS_HPP_
