#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>

#include "omega/matrix_group.hpp"
#include "parallel.hpp"

namespace omega {

EnumerationAborted::EnumerationAborted(u64 found, u64 cap)
    : std::runtime_error("enumeration aborted: more than " + std::to_string(cap) + " elements (" +
                         std::to_string(found) + " found)"),
      found_(found),
      cap_(cap) {}

void MatrixGroup::validate() const {
  if (!field) throw std::invalid_argument("matrix group without field");
  if (generators.empty()) throw std::invalid_argument("matrix group without generators");
  for (const auto& g : generators) {
    if (g.dim() != dim || g.field()->size() != field->size())
      throw std::invalid_argument("generator does not match the group's field or dimension");
    if (g.determinant() == 0) throw std::invalid_argument("generator is singular: " + g.to_string());
  }
}

ElementLayout::ElementLayout(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("element layout without blocks");
  for (const auto& b : blocks_) {
    if (!b.field || b.dim == 0 || b.dim > kMaxMatrixDim) throw std::invalid_argument("bad layout block");
    offsets_.push_back(width_);
    width_ += std::size_t{b.dim} * b.dim;
  }
}

void ElementLayout::multiply(const Code* a, const Code* b, Code* out) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    multiply_codes(*blocks_[i].field, blocks_[i].dim, a + offsets_[i], b + offsets_[i], out + offsets_[i]);
}

void ElementLayout::set_identity(Code* out) const {
  std::fill(out, out + width_, Code{0});
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (unsigned d = 0; d < blocks_[i].dim; ++d) out[offsets_[i] + std::size_t{d} * blocks_[i].dim + d] = 1;
}

bool ElementLayout::is_identity(const Code* a) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const unsigned n = blocks_[i].dim;
    const Code* m = a + offsets_[i];
    for (unsigned r = 0; r < n; ++r)
      for (unsigned c = 0; c < n; ++c)
        if (m[std::size_t{r} * n + c] != (r == c ? 1 : 0)) return false;
  }
  return true;
}

std::vector<unsigned> ElementLayout::key_widths() const {
  std::vector<unsigned> w;
  for (const auto& b : blocks_) w.push_back(b.field->size() <= 256 ? 1 : 2);
  return w;
}

std::string ElementLayout::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << " | ";
    os << blocks_[i].field->name() << '^' << blocks_[i].dim << 'x' << blocks_[i].dim;
  }
  return os.str();
}

ElementTable make_table(const std::map<u64, u64>& histogram) {
  ElementTable t;
  t.order_histogram = histogram;
  for (auto [order, count] : histogram) {
    t.size += count;
    t.spectrum.push_back(order);
  }
  return t;
}

namespace {

u64 hash_codes(const Code* a, std::size_t n) {
  u64 h = 0x9E3779B97F4A7C15ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= a[i];
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 29;
  }
  return h;
}

constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

// Order of the element at `a` by successive multiplication; scratch must
// hold 2 * width codes.
u64 powering_order(const ElementLayout& layout, const Code* a, u64 bound, Code* scratch) {
  const std::size_t w = layout.width();
  Code* x = scratch;
  Code* y = scratch + w;
  std::copy(a, a + w, x);
  for (u64 e = 1; e <= bound; ++e) {
    if (layout.is_identity(x)) return e;
    layout.multiply(x, a, y);
    std::swap(x, y);
  }
  throw std::logic_error("element order exceeds the group order " + std::to_string(bound));
}

}  // namespace

Enumeration::Enumeration(ElementLayout layout, std::vector<Code> sorted_elements, unsigned threads)
    : layout_(std::move(layout)), arena_(std::move(sorted_elements)) {
  const std::size_t w = layout_.width();
  if (w == 0 || arena_.size() % w != 0) throw std::invalid_argument("element arena does not match layout");
  size_ = arena_.size() / w;
  orders_.assign(size_, 0);

  // Chunks write disjoint slices, so the result does not depend on scheduling.
  struct Unit {};
  detail::parallel_chunks<Unit>(size_, threads, [&](u64 lo, u64 hi, Unit&) {
    std::vector<Code> scratch(2 * w);
    for (u64 i = lo; i < hi; ++i)
      orders_[i] = static_cast<std::uint32_t>(powering_order(layout_, arena_.data() + i * w, size_, scratch.data()));
  });
  std::map<u64, u64> hist;
  for (auto o : orders_) ++hist[o];
  table_ = make_table(hist);
}

std::optional<u64> Enumeration::index_of(std::span<const Code> element) const {
  const std::size_t w = layout_.width();
  if (element.size() != w) return std::nullopt;
  u64 lo = 0, hi = size_;
  while (lo < hi) {
    const u64 mid = lo + (hi - lo) / 2;
    const Code* m = arena_.data() + mid * w;
    if (std::lexicographical_compare(m, m + w, element.begin(), element.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size_ && std::equal(element.begin(), element.end(), arena_.data() + lo * w)) return lo;
  return std::nullopt;
}

Matrix Enumeration::matrix(u64 i, std::size_t block) const {
  const Block& b = layout_.blocks().at(block);
  const Code* start = arena_.data() + i * layout_.width() + layout_.offset(block);
  return Matrix::from_codes(b.field, b.dim, std::vector<Code>(start, start + std::size_t{b.dim} * b.dim));
}

std::map<u64, u64> Enumeration::first_of_each_order() const {
  std::map<u64, u64> first;
  for (u64 i = 0; i < size_; ++i) first.emplace(orders_[i], i);
  return first;
}

Enumeration enumerate_elements(const ElementLayout& layout, const std::vector<std::vector<Code>>& generators,
                               u64 cap, unsigned threads) {
  const std::size_t w = layout.width();
  if (cap >= kEmpty) throw std::invalid_argument("enumeration cap must be below 2^32 - 1");
  for (const auto& g : generators)
    if (g.size() != w) throw std::invalid_argument("generator does not match the element layout");

  std::vector<Code> arena(w);
  layout.set_identity(arena.data());
  u64 count = 1;
  std::vector<std::uint32_t> table(1024, kEmpty);
  u64 mask = table.size() - 1;

  auto insert_slot = [&](const Code* e, u64 h) -> u64 {
    u64 s = h & mask;
    while (table[s] != kEmpty) {
      if (std::memcmp(arena.data() + u64{table[s]} * w, e, w * sizeof(Code)) == 0) return ~u64{0};
      s = (s + 1) & mask;
    }
    return s;
  };
  table[insert_slot(arena.data(), hash_codes(arena.data(), w))] = 0;

  std::vector<Code> product(w);
  for (u64 i = 0; i < count; ++i) {
    for (const auto& g : generators) {
      layout.multiply(arena.data() + i * w, g.data(), product.data());
      const u64 slot = insert_slot(product.data(), hash_codes(product.data(), w));
      if (slot == ~u64{0}) continue;
      if (count >= cap) throw EnumerationAborted(count + 1, cap);
      arena.insert(arena.end(), product.begin(), product.end());
      table[slot] = static_cast<std::uint32_t>(count);
      ++count;
      if (2 * count > table.size()) {
        std::vector<std::uint32_t> bigger(table.size() * 2, kEmpty);
        table.swap(bigger);
        mask = table.size() - 1;
        for (u64 j = 0; j < count; ++j) {
          u64 s = hash_codes(arena.data() + j * w, w) & mask;
          while (table[s] != kEmpty) s = (s + 1) & mask;
          table[s] = static_cast<std::uint32_t>(j);
        }
      }
    }
  }
  std::vector<std::uint32_t>().swap(table);

  std::vector<std::uint32_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    const Code* x = arena.data() + u64{a} * w;
    const Code* y = arena.data() + u64{b} * w;
    return std::lexicographical_compare(x, x + w, y, y + w);
  });
  std::vector<Code> sorted(count * w);
  for (u64 i = 0; i < count; ++i)
    std::copy_n(arena.data() + u64{idx[i]} * w, w, sorted.data() + i * w);
  std::vector<Code>().swap(arena);
  return Enumeration(layout, std::move(sorted), threads);
}

std::vector<Code> flatten(const std::vector<Matrix>& blocks) {
  std::vector<Code> out;
  for (const auto& m : blocks) out.insert(out.end(), m.codes().begin(), m.codes().end());
  return out;
}

Enumeration enumerate(const MatrixGroup& group, u64 cap, unsigned threads) {
  group.validate();
  const ElementLayout layout({{group.field, group.dim}});
  std::vector<std::vector<Code>> gens;
  for (const auto& g : group.generators) gens.push_back(g.codes());
  Enumeration e = enumerate_elements(layout, gens, cap, threads);
  if (group.spec) {
    const auto expected = group_order(*group.spec).value();
    if (expected && *expected != e.size())
      throw std::logic_error("closure of " + to_string(*group.spec) + " has " + std::to_string(e.size()) +
                             " elements, expected " + std::to_string(*expected));
  }
  return e;
}

Enumeration closure(const std::vector<Matrix>& generators, u64 cap) {
  if (generators.empty()) throw std::invalid_argument("closure of an empty generating set");
  MatrixGroup g{generators.front().field(), generators.front().dim(), generators, std::nullopt};
  return enumerate(g, cap, 1);
}

u64 element_order_by_powering(const ElementLayout& layout, std::span<const Code> element, u64 bound) {
  if (element.size() != layout.width()) throw std::invalid_argument("element does not match layout");
  std::vector<Code> scratch(2 * layout.width());
  return powering_order(layout, element.data(), bound, scratch.data());
}

u64 element_order_by_peeling(const ElementLayout& layout, std::span<const Code> element, const Factored& multiple) {
  const std::size_t w = layout.width();
  if (element.size() != w) throw std::invalid_argument("element does not match layout");
  const auto m = multiple.value();
  if (!m) throw std::invalid_argument("element_order_by_peeling: multiple exceeds 2^63");
  auto power = [&](u64 e) {
    std::vector<Code> result(w), base(element.begin(), element.end()), tmp(w);
    layout.set_identity(result.data());
    while (e) {
      if (e & 1) {
        layout.multiply(result.data(), base.data(), tmp.data());
        result.swap(tmp);
      }
      e >>= 1;
      if (e) {
        layout.multiply(base.data(), base.data(), tmp.data());
        base.swap(tmp);
      }
    }
    return result;
  };
  if (!layout.is_identity(power(*m).data()))
    throw std::invalid_argument("element_order_by_peeling: multiple is not a multiple of the order");
  u64 order = *m;
  for (const auto& pp : multiple.factors())
    for (unsigned i = 0; i < pp.exponent && layout.is_identity(power(order / pp.prime).data()); ++i)
      order /= pp.prime;
  return order;
}

std::vector<u64> center_of(const Enumeration& group, const std::vector<std::vector<Code>>& generators) {
  const ElementLayout& layout = group.layout();
  const std::size_t w = layout.width();
  std::vector<Code> ab(w), ba(w);
  std::vector<u64> center;
  for (u64 i = 0; i < group.size(); ++i) {
    const Code* x = group.element(i).data();
    bool central = true;
    for (const auto& g : generators) {
      layout.multiply(x, g.data(), ab.data());
      layout.multiply(g.data(), x, ba.data());
      if (ab != ba) {
        central = false;
        break;
      }
    }
    if (central) center.push_back(i);
  }
  return center;
}

std::vector<u64> center_of(const Enumeration& group, const MatrixGroup& generators) {
  std::vector<std::vector<Code>> gens;
  for (const auto& g : generators.generators) gens.push_back(g.codes());
  return center_of(group, gens);
}

ElementTable quotient_spectrum(const Enumeration& group, const std::vector<u64>& center) {
  const ElementLayout& layout = group.layout();
  const std::size_t w = layout.width();
  std::vector<std::vector<Code>> z;
  for (u64 i : center) {
    if (i >= group.size()) throw std::invalid_argument("quotient_spectrum: index out of range");
    z.emplace_back(group.element(i).begin(), group.element(i).end());
  }
  auto in_z = [&](const std::vector<Code>& x) { return std::find(z.begin(), z.end(), x) != z.end(); };
  std::vector<Code> id(w), prod(w);
  layout.set_identity(id.data());
  if (!in_z(id)) throw std::invalid_argument("quotient_spectrum: subgroup lacks the identity");
  for (const auto& a : z)
    for (const auto& b : z) {
      layout.multiply(a.data(), b.data(), prod.data());
      if (!in_z(prod)) throw std::invalid_argument("quotient_spectrum: not closed under multiplication");
    }

  std::map<u64, u64> counts;
  std::vector<Code> x(w), y(w);
  for (u64 i = 0; i < group.size(); ++i) {
    const Code* g = group.element(i).data();
    std::copy_n(g, w, x.data());
    u64 k = 1;
    while (!in_z(x)) {
      layout.multiply(x.data(), g, y.data());
      x.swap(y);
      ++k;
    }
    ++counts[k];
  }
  for (auto& [order, count] : counts) {
    if (count % z.size() != 0) throw std::logic_error("quotient_spectrum: coset counts are inconsistent");
    count /= z.size();
  }
  return make_table(counts);
}

}  // namespace omega
