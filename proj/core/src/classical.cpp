#include "omega/classical.hpp"

#include <stdexcept>

namespace omega {

namespace {

constexpr u64 kMaxUnitriangularScan = u64{1} << 22;

GroupSpec universal(GroupSpec spec) {
  spec.version = Version::Universal;
  return spec;
}

void require_supported(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::A:
    case Family::A2:
    case Family::C: return;
    default:
      throw std::invalid_argument("no matrix model for " + to_string(spec) + " (supported families: A, 2A, C)");
  }
}

}  // namespace

FieldPtr natural_field(const GroupSpec& spec) {
  require_supported(spec);
  return spec.family == Family::A2 ? build_field(spec.p, 2 * spec.k) : build_field(spec.p, spec.k);
}

Matrix natural_form(const GroupSpec& spec) {
  const FieldPtr f = natural_field(spec);
  const unsigned n = spec.natural_dimension();
  if (spec.family == Family::A) return Matrix::identity(f, n);
  Matrix form(f, n);
  for (unsigned i = 0; i < n; ++i) {
    Code c = 1;
    if (spec.family == Family::C && i >= n / 2) c = f->neg(1);
    form.set(i, n - 1 - i, c);
  }
  return form;
}

bool preserves_form(const GroupSpec& spec, const Matrix& m) {
  const FieldPtr f = natural_field(spec);
  if (m.dim() != spec.natural_dimension() || m.field()->size() != f->size()) return false;
  switch (spec.family) {
    case Family::A: return m.determinant() == 1;
    case Family::C: {
      const Matrix j = natural_form(spec);
      return m.transpose() * j * m == j;
    }
    case Family::A2: {
      const Matrix k = natural_form(spec);
      return m.determinant() == 1 && m.transpose() * k * m.frobenius(spec.k) == k;
    }
    default: return false;
  }
}

MatrixGroup classical_generators(const GroupSpec& spec) {
  const GroupSpec u = universal(spec);
  const FieldPtr f = natural_field(u);
  const unsigned n = u.natural_dimension();
  const u64 fq = f->size();

  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  u64 total = 1;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    total *= fq;
    if (total > kMaxUnitriangularScan)
      throw std::invalid_argument("unipotent scan for " + to_string(spec) + " is too large");
  }

  std::vector<Matrix> u_gens;
  std::optional<Enumeration> generated;
  std::vector<Code> digits(slots.size(), 0);
  for (u64 code = 1; code < total; ++code) {
    // Lexicographic order with the first slot most significant.
    u64 c = code;
    for (std::size_t s = slots.size(); s-- > 0;) {
      digits[s] = static_cast<Code>(c % fq);
      c /= fq;
    }
    Matrix m = Matrix::identity(f, n);
    for (std::size_t s = 0; s < slots.size(); ++s) m.set(slots[s].first, slots[s].second, digits[s]);
    if (!preserves_form(u, m)) continue;
    if (generated && generated->index_of(m.codes())) continue;
    u_gens.push_back(m);
    generated = closure(u_gens);
  }

  MatrixGroup g;
  g.field = f;
  g.dim = n;
  g.spec = u;
  g.generators = u_gens;
  for (const auto& m : u_gens) g.generators.push_back(m.transpose());
  return g;
}

}  // namespace omega
