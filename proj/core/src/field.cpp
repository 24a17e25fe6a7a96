#include "omega/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace omega {

namespace {

// Remainder of a by b over GF(p); b monic. Coefficients constant term first.
std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned>& b, u64 p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i < db; ++i)
        a[shift + i] = static_cast<unsigned>((a[shift + i] + (p - lead) * b[i]) % p);
    }
    a.pop_back();
  }
  return a;
}

bool is_zero_poly(const std::vector<unsigned>& a) {
  for (unsigned c : a)
    if (c != 0) return false;
  return true;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<unsigned>& poly, u64 p) {
  std::vector<unsigned> f = poly;
  while (!f.empty() && f.back() % p == 0) f.pop_back();
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  // Normalise to monic.
  const unsigned lead_inv = static_cast<unsigned>(pow_mod(f.back() % p, p - 2, p));
  for (auto& c : f) c = static_cast<unsigned>((u64{c} % p) * lead_inv % p);
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const u64 count = checked_pow(p, d);
    for (u64 code = 0; code < count; ++code) {
      std::vector<unsigned> g(d + 1);
      u64 c = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (is_zero_poly(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

Field::Field(u64 p, unsigned k) : p_(p), k_(k), q_(checked_pow(p, k)) {
  // Modulus: the lexicographically smallest monic irreducible, which is the
  // one with the smallest integer code of its lower coefficients.
  if (k_ == 1) {
    modulus_ = {0, 1};
  } else {
    for (u64 code = 0; code < q_; ++code) {
      std::vector<unsigned> f(k_ + 1);
      u64 c = code;
      for (unsigned i = 0; i < k_; ++i) {
        f[i] = static_cast<unsigned>(c % p_);
        c /= p_;
      }
      f[k_] = 1;
      if (is_irreducible_mod_p(f, p_)) {
        modulus_ = std::move(f);
        break;
      }
    }
  }

  neg_table_.resize(q_);
  for (u64 a = 0; a < q_; ++a) {
    auto c = coefficients(static_cast<Code>(a));
    for (auto& x : c) x = static_cast<unsigned>((p_ - x) % p_);
    neg_table_[a] = from_coefficients(c);
  }
  if (k_ > 1 && p_ != 2 && q_ <= 1024) {
    add_table_.resize(q_ * q_);
    for (u64 a = 0; a < q_; ++a)
      for (u64 b = 0; b < q_; ++b)
        add_table_[a * q_ + b] = add_digits(static_cast<Code>(a), static_cast<Code>(b));
  }

  // Primitive element: smallest code whose order is q - 1.
  const Factored order = factorize(q_ - 1 == 0 ? 1 : q_ - 1);
  auto slow_pow = [&](Code a, u64 e) {
    Code r = 1;
    while (e) {
      if (e & 1) r = mul_poly(r, a);
      a = mul_poly(a, a);
      e >>= 1;
    }
    return r;
  };
  for (u64 g = 1; g < q_; ++g) {
    bool primitive = true;
    for (const auto& pp : order.factors())
      if (slow_pow(static_cast<Code>(g), (q_ - 1) / pp.prime) == 1) primitive = false;
    if (primitive) {
      primitive_ = static_cast<Code>(g);
      break;
    }
  }
  exp_table_.resize(2 * (q_ - 1));
  log_table_.assign(q_, 0);
  Code x = 1;
  for (u64 e = 0; e < q_ - 1; ++e) {
    exp_table_[e] = x;
    exp_table_[e + q_ - 1] = x;
    log_table_[x] = static_cast<unsigned>(e);
    x = mul_poly(x, primitive_);
  }
  if (q_ <= 256) {
    std::vector<Code> table(256 * 256, 0);
    for (u64 a = 0; a < q_; ++a)
      for (u64 b = 0; b < q_; ++b) table[(a << 8) | b] = mul(static_cast<Code>(a), static_cast<Code>(b));
    mul_table_ = std::move(table);
  }
}

Code Field::add_digits(Code a, Code b) const {
  u64 r = 0, scale = 1;
  u64 x = a, y = b;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Code>(r);
}

Code Field::mul_poly(Code a, Code b) const {
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  std::vector<unsigned> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j)
      prod[i + j] = static_cast<unsigned>((prod[i + j] + u64{ca[i]} * cb[j]) % p_);
  auto r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(k_, 0);
  return from_coefficients(r);
}

Code Field::inv(Code a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  const unsigned l = log_table_[a];
  return exp_table_[l == 0 ? 0 : (q_ - 1) - l];
}

Code Field::pow(Code a, u64 e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_table_[static_cast<u64>(log_table_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

Code Field::frobenius(Code a, unsigned times) const {
  u64 e = 1;
  for (unsigned i = 0; i < times % k_; ++i) e *= p_;
  return pow(a, e);
}

Code Field::from_int(i64 v) const {
  const i64 p = static_cast<i64>(p_);
  return static_cast<Code>(((v % p) + p) % p);
}

std::vector<unsigned> Field::coefficients(Code a) const {
  std::vector<unsigned> c(k_);
  u64 x = a;
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = static_cast<unsigned>(x % p_);
    x /= p_;
  }
  return c;
}

Code Field::from_coefficients(const std::vector<unsigned>& c) const {
  u64 r = 0, scale = 1;
  for (unsigned i = 0; i < k_ && i < c.size(); ++i) {
    r += (c[i] % p_) * scale;
    scale *= p_;
  }
  return static_cast<Code>(r);
}

u64 Field::element_order(Code a) const {
  if (a == 0) throw std::domain_error("order of zero");
  return (q_ - 1) / gcd(u64{log_table_[a]}, q_ - 1);
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

FieldPtr build_field(u64 p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("field degree must be positive");
  u64 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw std::invalid_argument("field size " + std::to_string(p) + "^" + std::to_string(k) +
                                  " exceeds 2^16");
  }
  static std::mutex mu;
  static std::map<std::pair<u64, unsigned>, FieldPtr> interned;
  std::lock_guard lock(mu);
  auto& slot = interned[{p, k}];
  if (!slot) slot = FieldPtr(new Field(p, k));
  return slot;
}

FieldPtr field_of_order(u64 q) {
  const auto pk = prime_power_decomposition(q);
  if (!pk) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  return build_field(pk->first, pk->second);
}

}  // namespace omega
