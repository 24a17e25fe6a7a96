// Explicit matrix groups: closure from generators, per-element orders,
// centres and quotient spectra.

#ifndef OMEGA_MATRIX_GROUP_HPP_
#define OMEGA_MATRIX_GROUP_HPP_

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "omega/groups.hpp"
#include "omega/matrix.hpp"

namespace omega {

inline constexpr u64 kDefaultEnumerationCap = u64{1} << 24;

/// Thrown when a closure exceeds its cap. Carries the partial count.
class EnumerationAborted : public std::runtime_error {
public:
  EnumerationAborted(u64 found, u64 cap);
  u64 found() const { return found_; }
  u64 cap() const { return cap_; }

private:
  u64 found_;
  u64 cap_;
};

struct MatrixGroup {
  FieldPtr field;
  unsigned dim = 0;
  std::vector<Matrix> generators;
  std::optional<GroupSpec> spec;  // set when built from a group spec

  /// Checks every generator has the group's field and dimension and is
  /// invertible. Throws std::invalid_argument.
  void validate() const;
};

/// One block of a block-diagonal element: a dim x dim matrix over `field`.
struct Block {
  FieldPtr field;
  unsigned dim = 0;
};

/// Storage format of group elements: a tuple of matrices multiplied
/// componentwise. Elements are flat arrays of codes, block after block.
class ElementLayout {
public:
  ElementLayout() = default;
  explicit ElementLayout(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t width() const { return width_; }
  std::size_t offset(std::size_t block) const { return offsets_[block]; }

  void multiply(const Code* a, const Code* b, Code* out) const;
  void set_identity(Code* out) const;
  bool is_identity(const Code* a) const;
  /// Bytes per code in the serialised key of each block (1 or 2).
  std::vector<unsigned> key_widths() const;
  std::string describe() const;  // e.g. "GF(2)^6x6 | GF(3)^6x6"

private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t width_ = 0;
};

/// |G|, the order histogram and the spectrum (sorted orders present).
struct ElementTable {
  u64 size = 0;
  std::map<u64, u64> order_histogram;
  std::vector<u64> spectrum;

  bool has_order(u64 m) const { return order_histogram.count(m) != 0; }
};

ElementTable make_table(const std::map<u64, u64>& histogram);

/// A closed, sorted set of elements with their orders.
class Enumeration {
public:
  Enumeration() = default;
  /// Takes elements already sorted and distinct; computes orders.
  Enumeration(ElementLayout layout, std::vector<Code> sorted_elements, unsigned threads = 0);

  const ElementLayout& layout() const { return layout_; }
  u64 size() const { return size_; }
  std::span<const Code> element(u64 i) const {
    return {arena_.data() + i * layout_.width(), layout_.width()};
  }
  u64 order(u64 i) const { return orders_[i]; }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  const std::vector<Code>& arena() const { return arena_; }
  std::optional<u64> index_of(std::span<const Code> element) const;
  /// Block `block` of element i as a matrix.
  Matrix matrix(u64 i, std::size_t block = 0) const;
  const ElementTable& table() const& { return table_; }
  ElementTable table() && { return std::move(table_); }
  /// First element (in sorted order) of each order.
  std::map<u64, u64> first_of_each_order() const;

private:
  ElementLayout layout_;
  std::vector<Code> arena_;
  std::vector<std::uint32_t> orders_;
  u64 size_ = 0;
  ElementTable table_;
};

/// Closure of the generators under multiplication in the given layout.
/// Throws EnumerationAborted when more than `cap` elements appear.
Enumeration enumerate_elements(const ElementLayout& layout, const std::vector<std::vector<Code>>& generators,
                               u64 cap = kDefaultEnumerationCap, unsigned threads = 0);

/// Closure of a matrix group. When the group carries a GroupSpec and its
/// order is known, the count is checked against it (std::logic_error).
Enumeration enumerate(const MatrixGroup& group, u64 cap = kDefaultEnumerationCap, unsigned threads = 0);

/// Closure of an arbitrary generating set of same-sized matrices.
Enumeration closure(const std::vector<Matrix>& generators, u64 cap = kDefaultEnumerationCap);

/// Order of a single element through repeated multiplication in a layout.
u64 element_order_by_powering(const ElementLayout& layout, std::span<const Code> element, u64 bound);

/// Order of a single element from the prime factorisation of a multiple of
/// its order: strips prime powers while the power stays trivial.
u64 element_order_by_peeling(const ElementLayout& layout, std::span<const Code> element,
                             const Factored& multiple);

/// Indices of the elements commuting with every generator.
std::vector<u64> center_of(const Enumeration& group, const std::vector<std::vector<Code>>& generators);
std::vector<u64> center_of(const Enumeration& group, const MatrixGroup& generators);

/// Orders in G/Z where Z is given by element indices. The histogram counts
/// cosets. Throws std::invalid_argument if Z is not a subgroup.
ElementTable quotient_spectrum(const Enumeration& group, const std::vector<u64>& center);

/// Flattens matrices into a layout's element format (one per block).
std::vector<Code> flatten(const std::vector<Matrix>& blocks);

}  // namespace omega

#endif  // OMEGA_MATRIX_GROUP_HPP_
