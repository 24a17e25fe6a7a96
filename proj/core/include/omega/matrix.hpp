// Dense square matrices over a Field, row-major, plus the exact linear
// algebra the oracle needs.

#ifndef OMEGA_MATRIX_HPP_
#define OMEGA_MATRIX_HPP_

#include <compare>
#include <string>
#include <vector>

#include "omega/field.hpp"

namespace omega {

inline constexpr unsigned kMaxMatrixDim = 64;

class Matrix {
public:
  Matrix() = default;
  /// Zero matrix. Throws std::invalid_argument for dim 0 or dim > 64.
  Matrix(FieldPtr field, unsigned dim);

  static Matrix identity(FieldPtr field, unsigned dim);
  /// Row-major element codes; size must be dim^2 and every code < |F|.
  static Matrix from_codes(FieldPtr field, unsigned dim, std::vector<Code> codes);
  /// Row-major integers mapped into the prime field.
  static Matrix from_ints(FieldPtr field, unsigned dim, const std::vector<i64>& values);

  const FieldPtr& field() const { return field_; }
  unsigned dim() const { return dim_; }
  Code at(unsigned i, unsigned j) const { return data_[std::size_t{i} * dim_ + j]; }
  void set(unsigned i, unsigned j, Code c) { data_[std::size_t{i} * dim_ + j] = c; }
  const std::vector<Code>& codes() const& { return data_; }
  std::vector<Code> codes() && { return std::move(data_); }

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix pow(u64 e) const;
  Matrix transpose() const;
  /// Entrywise a -> a^(p^times).
  Matrix frobenius(unsigned times) const;
  /// Throws std::domain_error when singular.
  Matrix inverse() const;
  Code determinant() const;
  unsigned rank() const;
  bool is_identity() const;
  bool is_zero() const;

  std::vector<Code> apply(const std::vector<Code>& v) const;

  /// Least e >= 1 with M^e = I by successive multiplication, giving up after
  /// `bound` steps (std::runtime_error).
  u64 order_by_powering(u64 bound) const;
  /// Order computed from a multiple of it: strips each prime of `multiple`
  /// while M^(m/r) stays the identity. Throws std::invalid_argument when
  /// M^multiple != I.
  u64 order_by_peeling(const Factored& multiple) const;

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_ && same_field(a, b);
  }
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

private:
  static bool same_field(const Matrix& a, const Matrix& b);
  void require_compatible(const Matrix& other) const;

  FieldPtr field_;
  unsigned dim_ = 0;
  std::vector<Code> data_;
};

/// out = a * b for row-major dim x dim code arrays. `out` must not alias.
void multiply_codes(const Field& f, unsigned dim, const Code* a, const Code* b, Code* out);

/// Rank of a rows x cols matrix over f (row-major codes, copied).
unsigned rank_of(const Field& f, unsigned rows, unsigned cols, std::vector<Code> data);

/// Degree of the minimal polynomial: least d with I, M, ..., M^d dependent.
unsigned min_poly_degree(const Matrix& m);

/// dim ker(M - I).
unsigned fixed_space_dim(const Matrix& m);

/// Basis of ker(M - I), one vector per row.
std::vector<std::vector<Code>> fixed_space_basis(const Matrix& m);

/// Restriction of M to an M-invariant subspace with the given basis,
/// expressed in that basis. Throws std::invalid_argument when the subspace
/// is not invariant.
Matrix restrict_to(const Matrix& m, const std::vector<std::vector<Code>>& basis);

}  // namespace omega

#endif  // OMEGA_MATRIX_HPP_
