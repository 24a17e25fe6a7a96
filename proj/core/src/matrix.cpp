#include "omega/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace omega {

namespace {

void check_dim(unsigned dim) {
  if (dim == 0 || dim > kMaxMatrixDim)
    throw std::invalid_argument("matrix dimension " + std::to_string(dim) + " outside [1, 64]");
}

// In-place reduced row echelon form of a rows x cols array. Returns the pivot
// column of each nonzero row.
std::vector<unsigned> rref(const Field& f, unsigned rows, unsigned cols, std::vector<Code>& a) {
  std::vector<unsigned> pivots;
  unsigned r = 0;
  for (unsigned c = 0; c < cols && r < rows; ++c) {
    unsigned piv = r;
    while (piv < rows && a[std::size_t{piv} * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (unsigned j = 0; j < cols; ++j) std::swap(a[std::size_t{piv} * cols + j], a[std::size_t{r} * cols + j]);
    const Code inv = f.inv(a[std::size_t{r} * cols + c]);
    for (unsigned j = 0; j < cols; ++j) a[std::size_t{r} * cols + j] = f.mul(a[std::size_t{r} * cols + j], inv);
    for (unsigned i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Code factor = a[std::size_t{i} * cols + c];
      if (factor == 0) continue;
      const Code nf = f.neg(factor);
      for (unsigned j = 0; j < cols; ++j)
        a[std::size_t{i} * cols + j] =
            f.add(a[std::size_t{i} * cols + j], f.mul(nf, a[std::size_t{r} * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Basis of the null space of a rows x cols matrix (column vectors x, Ax = 0).
std::vector<std::vector<Code>> null_space(const Field& f, unsigned rows, unsigned cols, std::vector<Code> a) {
  const auto pivots = rref(f, rows, cols, a);
  std::vector<bool> is_pivot(cols, false);
  for (unsigned c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Code>> basis;
  for (unsigned free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Code> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(a[i * cols + free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

void multiply_codes(const Field& f, unsigned dim, const Code* a, const Code* b, Code* out) {
  const std::size_t n = dim;
  if (f.is_prime_field()) {
    const u64 p = f.characteristic();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        u64 acc = 0;
        for (std::size_t t = 0; t < n; ++t) acc += u64{a[i * n + t]} * b[t * n + j];
        out[i * n + j] = static_cast<Code>(acc % p);
      }
    return;
  }
  if (f.characteristic() == 2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Code acc = 0;
        for (std::size_t t = 0; t < n; ++t) acc ^= f.mul(a[i * n + t], b[t * n + j]);
        out[i * n + j] = acc;
      }
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Code acc = 0;
      for (std::size_t t = 0; t < n; ++t) acc = f.add(acc, f.mul(a[i * n + t], b[t * n + j]));
      out[i * n + j] = acc;
    }
}

unsigned rank_of(const Field& f, unsigned rows, unsigned cols, std::vector<Code> data) {
  return static_cast<unsigned>(rref(f, rows, cols, data).size());
}

Matrix::Matrix(FieldPtr field, unsigned dim) : field_(std::move(field)), dim_(dim) {
  if (!field_) throw std::invalid_argument("matrix without field");
  check_dim(dim);
  data_.assign(std::size_t{dim} * dim, 0);
}

Matrix Matrix::identity(FieldPtr field, unsigned dim) {
  Matrix m(std::move(field), dim);
  for (unsigned i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_codes(FieldPtr field, unsigned dim, std::vector<Code> codes) {
  Matrix m(std::move(field), dim);
  if (codes.size() != m.data_.size())
    throw std::invalid_argument("matrix needs " + std::to_string(m.data_.size()) + " entries, got " +
                                std::to_string(codes.size()));
  for (Code c : codes)
    if (c >= m.field_->size())
      throw std::invalid_argument("entry " + std::to_string(c) + " is not an element of " + m.field_->name());
  m.data_ = std::move(codes);
  return m;
}

Matrix Matrix::from_ints(FieldPtr field, unsigned dim, const std::vector<i64>& values) {
  std::vector<Code> codes;
  codes.reserve(values.size());
  for (i64 v : values) codes.push_back(field->from_int(v));
  return from_codes(std::move(field), dim, std::move(codes));
}

bool Matrix::same_field(const Matrix& a, const Matrix& b) {
  if (a.field_ == b.field_) return true;
  if (!a.field_ || !b.field_) return false;
  return a.field_->size() == b.field_->size();
}

void Matrix::require_compatible(const Matrix& other) const {
  if (dim_ != other.dim_ || !same_field(*this, other))
    throw std::invalid_argument("matrices over different fields or of different sizes");
}

Matrix Matrix::operator*(const Matrix& other) const {
  require_compatible(other);
  Matrix r(field_, dim_);
  multiply_codes(*field_, dim_, data_.data(), other.data_.data(), r.data_.data());
  return r;
}

Matrix Matrix::operator+(const Matrix& other) const {
  require_compatible(other);
  Matrix r(field_, dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->add(data_[i], other.data_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
  require_compatible(other);
  Matrix r(field_, dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->sub(data_[i], other.data_[i]);
  return r;
}

Matrix Matrix::pow(u64 e) const {
  Matrix result = identity(field_, dim_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, dim_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) r.set(j, i, at(i, j));
  return r;
}

Matrix Matrix::frobenius(unsigned times) const {
  Matrix r(field_, dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->frobenius(data_[i], times);
  return r;
}

Matrix Matrix::inverse() const {
  const unsigned n = dim_;
  const unsigned cols = 2 * n;
  std::vector<Code> a(std::size_t{n} * cols, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) a[std::size_t{i} * cols + j] = at(i, j);
    a[std::size_t{i} * cols + n + i] = 1;
  }
  const auto pivots = rref(*field_, n, cols, a);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Matrix r(field_, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) r.set(i, j, a[std::size_t{i} * cols + n + j]);
  return r;
}

Code Matrix::determinant() const {
  const Field& f = *field_;
  const unsigned n = dim_;
  std::vector<Code> a = data_;
  Code det = 1;
  for (unsigned c = 0; c < n; ++c) {
    unsigned piv = c;
    while (piv < n && a[std::size_t{piv} * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (unsigned j = 0; j < n; ++j) std::swap(a[std::size_t{piv} * n + j], a[std::size_t{c} * n + j]);
      det = f.neg(det);
    }
    const Code pv = a[std::size_t{c} * n + c];
    det = f.mul(det, pv);
    const Code inv = f.inv(pv);
    for (unsigned i = c + 1; i < n; ++i) {
      const Code factor = f.mul(a[std::size_t{i} * n + c], inv);
      if (factor == 0) continue;
      const Code nf = f.neg(factor);
      for (unsigned j = c; j < n; ++j)
        a[std::size_t{i} * n + j] = f.add(a[std::size_t{i} * n + j], f.mul(nf, a[std::size_t{c} * n + j]));
    }
  }
  return det;
}

unsigned Matrix::rank() const { return rank_of(*field_, dim_, dim_, data_); }

bool Matrix::is_identity() const {
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (Code c : data_)
    if (c != 0) return false;
  return true;
}

std::vector<Code> Matrix::apply(const std::vector<Code>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length does not match matrix dimension");
  std::vector<Code> r(dim_, 0);
  for (unsigned i = 0; i < dim_; ++i) {
    Code acc = 0;
    for (unsigned j = 0; j < dim_; ++j) acc = field_->add(acc, field_->mul(at(i, j), v[j]));
    r[i] = acc;
  }
  return r;
}

u64 Matrix::order_by_powering(u64 bound) const {
  Matrix x = *this;
  for (u64 e = 1; e <= bound; ++e) {
    if (x.is_identity()) return e;
    x = x * *this;
  }
  throw std::runtime_error("matrix order exceeds bound " + std::to_string(bound));
}

u64 Matrix::order_by_peeling(const Factored& multiple) const {
  const auto m = multiple.value();
  if (!m) throw std::invalid_argument("order_by_peeling: multiple exceeds 2^63");
  if (!pow(*m).is_identity()) throw std::invalid_argument("order_by_peeling: M^multiple is not the identity");
  u64 order = *m;
  for (const auto& pp : multiple.factors())
    for (unsigned i = 0; i < pp.exponent && pow(order / pp.prime).is_identity(); ++i) order /= pp.prime;
  return order;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < dim_; ++i) {
    if (i) os << ',';
    os << '[';
    for (unsigned j = 0; j < dim_; ++j) {
      if (j) os << ',';
      os << at(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

unsigned min_poly_degree(const Matrix& m) {
  const Field& f = *m.field();
  const std::size_t len = m.codes().size();
  // Echelon rows (fully reduced on their pivot) of the powers seen so far.
  std::vector<std::vector<Code>> rows;
  std::vector<std::size_t> pivots;
  Matrix power = Matrix::identity(m.field(), m.dim());
  for (unsigned d = 0;; ++d) {
    std::vector<Code> v = power.codes();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Code c = v[pivots[r]];
      if (c == 0) continue;
      const Code nc = f.neg(c);
      for (std::size_t j = 0; j < len; ++j) v[j] = f.add(v[j], f.mul(nc, rows[r][j]));
    }
    std::size_t piv = 0;
    while (piv < len && v[piv] == 0) ++piv;
    if (piv == len) return d;
    const Code inv = f.inv(v[piv]);
    for (auto& x : v) x = f.mul(x, inv);
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    power = power * m;
  }
}

std::vector<std::vector<Code>> fixed_space_basis(const Matrix& m) {
  const Matrix a = m - Matrix::identity(m.field(), m.dim());
  return null_space(*m.field(), m.dim(), m.dim(), a.codes());
}

unsigned fixed_space_dim(const Matrix& m) {
  const Matrix a = m - Matrix::identity(m.field(), m.dim());
  return m.dim() - a.rank();
}

Matrix restrict_to(const Matrix& m, const std::vector<std::vector<Code>>& basis) {
  const Field& f = *m.field();
  const unsigned n = m.dim();
  const unsigned d = static_cast<unsigned>(basis.size());
  if (d == 0) throw std::invalid_argument("restrict_to: empty basis");
  // Solve B c_j = M b_j for every j with one elimination on [B | M B].
  const unsigned cols = 2 * d;
  std::vector<Code> a(std::size_t{n} * cols, 0);
  for (unsigned j = 0; j < d; ++j) {
    const auto image = m.apply(basis[j]);
    for (unsigned i = 0; i < n; ++i) {
      a[std::size_t{i} * cols + j] = basis[j][i];
      a[std::size_t{i} * cols + d + j] = image[i];
    }
  }
  const auto pivots = rref(f, n, cols, a);
  if (pivots.size() != d || pivots.back() != d - 1)
    throw std::invalid_argument("restrict_to: subspace is not invariant or basis is dependent");
  Matrix r(m.field(), d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) r.set(i, j, a[std::size_t{i} * cols + d + j]);
  return r;
}

}  // namespace omega
