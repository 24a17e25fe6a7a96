// Finite fields GF(p^k) with p^k <= 2^16.
//
// Elements are encoded as integers in [0, p^k): the code of
// c_0 + c_1 x + ... + c_{k-1} x^{k-1} is sum c_i p^i, where x is a root of
// the field's modulus. Instances are interned: build_field(p, k) always
// returns the same object for the same arguments.

#ifndef OMEGA_FIELD_HPP_
#define OMEGA_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "omega/arith.hpp"

namespace omega {

using Code = std::uint16_t;

inline constexpr u64 kMaxFieldSize = u64{1} << 16;

class Field {
public:
  u64 characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  u64 size() const { return q_; }

  /// Monic modulus, constant term first (length degree() + 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Code zero() const { return 0; }
  Code one() const { return 1; }
  /// Smallest code of multiplicative order size() - 1.
  Code primitive_element() const { return primitive_; }

  Code add(Code a, Code b) const {
    if (p_ == 2) return static_cast<Code>(a ^ b);
    if (k_ == 1) {
      const unsigned s = unsigned{a} + b;
      return static_cast<Code>(s >= p_ ? s - p_ : s);
    }
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    return add_digits(a, b);
  }
  Code neg(Code a) const { return neg_table_[a]; }
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code mul(Code a, Code b) const {
    if (!mul_table_.empty()) return mul_table_[(std::size_t{a} << 8) | b];
    if (a == 0 || b == 0) return 0;
    return exp_table_[std::size_t{log_table_[a]} + log_table_[b]];
  }
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, u64 e) const;
  /// a^(p^times).
  Code frobenius(Code a, unsigned times = 1) const;
  /// Discrete log base primitive_element(); a != 0.
  unsigned log(Code a) const { return log_table_[a]; }
  Code exp(u64 e) const { return exp_table_[e % (q_ - 1)]; }

  /// Image of an integer in the prime field.
  Code from_int(i64 v) const;
  std::vector<unsigned> coefficients(Code a) const;
  Code from_coefficients(const std::vector<unsigned>& c) const;
  u64 element_order(Code a) const;

  bool is_prime_field() const { return k_ == 1; }
  std::string name() const;  // "GF(9)"

private:
  friend std::shared_ptr<const Field> build_field(u64 p, unsigned k);
  Field(u64 p, unsigned k);
  Code add_digits(Code a, Code b) const;
  Code mul_poly(Code a, Code b) const;

  u64 p_;
  unsigned k_;
  u64 q_;
  std::vector<unsigned> modulus_;
  Code primitive_ = 1;
  std::vector<Code> add_table_;  // q^2 entries when q <= 1024 and k > 1, p odd
  std::vector<Code> neg_table_;
  std::vector<Code> mul_table_;  // 256 x 256 entries when q <= 256
  std::vector<Code> exp_table_;  // length 2(q-1)
  std::vector<unsigned> log_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^k) with the lexicographically smallest monic irreducible modulus
/// (coefficients compared from x^{k-1} down to x^0). Throws
/// std::invalid_argument when p is not prime or p^k > 2^16.
FieldPtr build_field(u64 p, unsigned k);

/// GF(q) for a prime power q.
FieldPtr field_of_order(u64 q);

/// True when the polynomial (constant term first) is irreducible over GF(p).
bool is_irreducible_mod_p(const std::vector<unsigned>& poly, u64 p);

}  // namespace omega

#endif  // OMEGA_FIELD_HPP_
