#include "omega/frobenius.hpp"

#include <algorithm>
#include <stdexcept>

#include "omega/classical.hpp"

namespace omega {

namespace {

constexpr u64 kVerifyCap = u64{1} << 20;

// Block-diagonal matrix with the given blocks down the diagonal.
Matrix block_diag(const FieldPtr& f, const std::vector<Matrix>& blocks) {
  unsigned n = 0;
  for (const auto& b : blocks) n += b.dim();
  Matrix m(f, n);
  unsigned at = 0;
  for (const auto& b : blocks) {
    for (unsigned i = 0; i < b.dim(); ++i)
      for (unsigned j = 0; j < b.dim(); ++j) m.set(at + i, at + j, b.at(i, j));
    at += b.dim();
  }
  return m;
}

Matrix scalar(const FieldPtr& f, Code c) {
  Matrix m(f, 1);
  m.set(0, 0, c);
  return m;
}

// Generators of the translations [[I, v], [0, 1]] of GF(q)^k inside
// GL_{k+1}(q): v runs over x^j e_i, which span GF(q)^k over GF(p).
std::vector<Matrix> translations(const FieldPtr& f, unsigned k) {
  std::vector<Matrix> gens;
  for (unsigned i = 0; i < k; ++i) {
    u64 code = 1;
    for (unsigned j = 0; j < f->degree(); ++j) {
      Matrix t = Matrix::identity(f, k + 1);
      t.set(i, k, static_cast<Code>(code));
      gens.push_back(t);
      code *= f->characteristic();
    }
  }
  return gens;
}

// The pi(d)-part of m.
u64 part_over(u64 m, u64 d) {
  u64 part = 1;
  if (d <= 1) return part;
  for (const auto& pp : factorize(d).factors()) part *= r_part(m, pp.prime).r_part;
  return part;
}

// X -> diag(X, det(X)^{-1}, I) from GL_{k+1}(q) into SL_n(q).
Matrix into_sl(const Matrix& x, unsigned n) {
  const FieldPtr& f = x.field();
  std::vector<Matrix> blocks{x, scalar(f, f->inv(x.determinant()))};
  if (n > x.dim() + 1) blocks.push_back(Matrix::identity(f, n - x.dim() - 1));
  return block_diag(f, blocks);
}

bool is_power_of_two(u64 n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

std::string_view to_string(FrobeniusKind kind) {
  switch (kind) {
    case FrobeniusKind::SlAffine: return "sl-affine";
    case FrobeniusKind::SlLine: return "sl-line";
    case FrobeniusKind::SpCyclic: return "sp-cyclic";
  }
  return "?";
}

FrobeniusKind parse_frobenius_kind(std::string_view text) {
  for (auto k : {FrobeniusKind::SlAffine, FrobeniusKind::SlLine, FrobeniusKind::SpCyclic})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown Frobenius family '" + std::string(text) +
                              "' (expected sl-affine, sl-line or sp-cyclic)");
}

Matrix singer_cycle(const FieldPtr& field, unsigned k) {
  if (k == 0 || k > kMaxMatrixDim) throw std::invalid_argument("singer_cycle: degree outside [1, 64]");
  const u64 fq = field->size();
  const u64 order = checked_pow(fq, k) - 1;
  const Factored factored = factorize(order);
  const u64 count = checked_pow(fq, k);
  for (u64 code = 1; code < count; ++code) {
    if (code % fq == 0) continue;  // zero constant term
    Matrix c(field, k);
    u64 x = code;
    for (unsigned i = 0; i < k; ++i) {
      if (i + 1 < k) c.set(i + 1, i, 1);
      c.set(i, k - 1, field->neg(static_cast<Code>(x % fq)));
      x /= fq;
    }
    if (!c.pow(order).is_identity()) continue;
    bool primitive = true;
    for (const auto& pp : factored.factors())
      if (c.pow(order / pp.prime).is_identity()) primitive = false;
    if (primitive) return c;
  }
  throw std::logic_error("no primitive polynomial found");
}

FrobeniusWitness frobenius_witness(FrobeniusKind kind, unsigned n, u64 q, unsigned k, const Enumeration* ambient,
                                   u64 cap) {
  FrobeniusWitness w;
  w.kind = kind;
  w.n = n;
  w.q = q;
  w.k = k;
  const FieldPtr f = field_of_order(q);

  switch (kind) {
    case FrobeniusKind::SlAffine: {
      if (n < 2) throw std::invalid_argument("sl-affine needs n >= 2");
      w.ambient = make_group_spec(Family::A, n - 1, q, Version::Universal);
      const u64 m = checked_pow(q, n - 1) - 1;
      const u64 strip = part_over(m, gcd(u64{n}, q - 1));
      const Matrix a = singer_cycle(f, n - 1).pow(strip);
      w.complement_gens = {into_sl(a, n)};
      w.kernel_gens = translations(f, n - 1);
      w.kernel_order = checked_pow(q, n - 1);
      w.complement_order = m / strip;
      break;
    }
    case FrobeniusKind::SlLine: {
      if (k < 1 || k + 1 >= n) throw std::invalid_argument("sl-line needs 1 <= k < n - 1");
      w.ambient = make_group_spec(Family::A, n - 1, q, Version::Universal);
      const Matrix s = singer_cycle(f, k);
      w.complement_gens = {into_sl(block_diag(f, {s, scalar(f, 1)}), n)};
      for (const auto& t : translations(f, k)) w.kernel_gens.push_back(into_sl(t, n));
      w.kernel_order = checked_pow(q, k);
      w.complement_order = checked_pow(q, k) - 1;
      break;
    }
    case FrobeniusKind::SpCyclic: {
      if (q % 2 != 0 || n < 2 || !is_power_of_two(n))
        throw std::invalid_argument("sp-cyclic needs even q and n a power of 2 with n >= 2");
      w.ambient = make_group_spec(Family::C, n, q, Version::Universal);
      w.kernel_order = checked_pow(q, n) + 1;
      w.complement_order = 2 * u64{n};
      std::optional<Enumeration> owned;
      if (ambient == nullptr) {
        owned = enumerate(classical_generators(w.ambient), cap);
        ambient = &*owned;
      }
      std::optional<u64> a_index;
      for (u64 i = 0; i < ambient->size() && !a_index; ++i)
        if (ambient->order(i) == w.kernel_order) a_index = i;
      if (!a_index) throw std::runtime_error("no element of order " + std::to_string(w.kernel_order));
      const Matrix a = ambient->matrix(*a_index);
      std::vector<Matrix> cyclic{Matrix::identity(a.field(), a.dim())};
      for (u64 i = 1; i < w.kernel_order; ++i) cyclic.push_back(cyclic.back() * a);
      std::sort(cyclic.begin(), cyclic.end());
      for (u64 i = 0; i < ambient->size(); ++i) {
        if (ambient->order(i) != w.complement_order) continue;
        const Matrix b = ambient->matrix(i);
        if (!std::binary_search(cyclic.begin(), cyclic.end(), b * a * b.inverse())) continue;
        if (!verify_frobenius({a}, {b}).pass) continue;
        w.kernel_gens = {a};
        w.complement_gens = {b};
        return w;
      }
      throw std::runtime_error("no complement of order " + std::to_string(w.complement_order) +
                               " acting fixed-point-freely on a cyclic subgroup of order " +
                               std::to_string(w.kernel_order));
    }
  }
  return w;
}

FrobeniusVerdict verify_frobenius(const std::vector<Matrix>& kernel_gens, const std::vector<Matrix>& complement_gens) {
  FrobeniusVerdict v;
  if (kernel_gens.empty() || complement_gens.empty()) {
    v.reason = "empty generating set";
    return v;
  }
  const Matrix& ref = kernel_gens.front();
  for (const auto* list : {&kernel_gens, &complement_gens})
    for (const auto& m : *list)
      if (m.dim() != ref.dim() || m.field()->size() != ref.field()->size()) {
        v.reason = "generators differ in field or dimension";
        return v;
      }
  Enumeration kernel, complement;
  try {
    kernel = closure(kernel_gens, kVerifyCap);
    complement = closure(complement_gens, kVerifyCap);
  } catch (const EnumerationAborted& e) {
    v.reason = std::string("closure too large: ") + e.what();
    return v;
  }
  v.kernel_order = kernel.size();
  v.complement_order = complement.size();
  v.complement_cyclic = complement.table().has_order(complement.size());
  if (kernel.size() == 1 || complement.size() == 1) {
    v.reason = "kernel and complement must both be nontrivial";
    return v;
  }

  for (const auto& c : complement_gens) {
    const Matrix c_inv = c.inverse();
    for (const auto& k : kernel_gens)
      if (!kernel.index_of((c * k * c_inv).codes())) {
        v.reason = "complement does not normalise kernel";
        v.counterexample = std::make_pair(c, k);
        return v;
      }
  }
  for (u64 i = 0; i < complement.size(); ++i) {
    const Matrix c = complement.matrix(i);
    if (c.is_identity()) continue;
    if (kernel.index_of(c.codes())) {
      v.reason = "kernel and complement intersect nontrivially";
      v.counterexample = std::make_pair(c, c);
      return v;
    }
  }
  for (u64 i = 0; i < complement.size(); ++i) {
    const Matrix c = complement.matrix(i);
    if (c.is_identity()) continue;
    for (u64 j = 0; j < kernel.size(); ++j) {
      const Matrix k = kernel.matrix(j);
      if (k.is_identity()) continue;
      if (c * k == k * c) {
        v.reason = "nontrivial complement element centralises a nontrivial kernel element";
        v.counterexample = std::make_pair(c, k);
        return v;
      }
    }
  }
  v.pass = true;
  return v;
}

}  // namespace omega
