#include "omega/module.hpp"

#include "parallel.hpp"

namespace omega {

bool ModuleAction::is_natural() const {
  if (images.size() != group.generators.size()) return false;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (!(images[i] == group.generators[i])) return false;
  return true;
}

void ModuleAction::check_shape() const {
  group.validate();
  if (images.size() != group.generators.size())
    throw std::invalid_argument("module action needs one image per generator (" +
                                std::to_string(group.generators.size()) + "), got " + std::to_string(images.size()));
  for (const auto& m : images) {
    if (m.dim() != images.front().dim() || m.field()->size() != images.front().field()->size())
      throw std::invalid_argument("module images differ in field or dimension");
    if (m.determinant() == 0) throw std::invalid_argument("module image is singular: " + m.to_string());
  }
}

ModuleAction natural_module(const MatrixGroup& group) {
  group.validate();
  return ModuleAction{group, group.generators};
}

ModuleAction permutation_module(const std::vector<std::vector<unsigned>>& perms, u64 r) {
  if (perms.empty()) throw std::invalid_argument("permutation_module: no generators");
  const std::size_t m = perms.front().size();
  if (m == 0 || m > kMaxMatrixDim) throw std::invalid_argument("permutation degree must lie in [1, 64]");
  const FieldPtr gf2 = build_field(2, 1);
  const FieldPtr fr = field_of_order(r);
  ModuleAction action;
  action.group.field = gf2;
  action.group.dim = static_cast<unsigned>(m);
  for (const auto& perm : perms) {
    if (perm.size() != m)
      throw std::invalid_argument("permutation_module: inconsistent degrees " + std::to_string(m) + " and " +
                                  std::to_string(perm.size()));
    std::vector<bool> seen(m + 1, false);
    Matrix src(gf2, static_cast<unsigned>(m));
    Matrix img(fr, static_cast<unsigned>(m));
    for (std::size_t i = 0; i < m; ++i) {
      const unsigned target = perm[i];
      if (target < 1 || target > m || seen[target])
        throw std::invalid_argument("permutation_module: not a permutation of 1.." + std::to_string(m));
      seen[target] = true;
      src.set(target - 1, static_cast<unsigned>(i), 1);
      img.set(target - 1, static_cast<unsigned>(i), 1);
    }
    action.group.generators.push_back(src);
    action.images.push_back(img);
  }
  return action;
}

namespace {

Matrix word_product(const std::vector<Matrix>& gens, const std::vector<int>& word) {
  if (gens.empty()) throw std::invalid_argument("word over an empty generating set");
  Matrix result = Matrix::identity(gens.front().field(), gens.front().dim());
  for (int letter : word) {
    const int idx = letter >= 0 ? letter : -letter - 1;
    if (idx >= static_cast<int>(gens.size()))
      throw std::invalid_argument("word letter " + std::to_string(letter) + " out of range");
    result = result * (letter >= 0 ? gens[idx] : gens[idx].inverse());
  }
  return result;
}

}  // namespace

Matrix image_of_word(const ModuleAction& action, const std::vector<int>& word) {
  return word_product(action.images, word);
}

Matrix source_of_word(const ModuleAction& action, const std::vector<int>& word) {
  return word_product(action.group.generators, word);
}

unsigned fixed_space_dim(const ModuleAction& action, const std::vector<int>& word) {
  return fixed_space_dim(image_of_word(action, word));
}

unsigned min_poly_degree(const ModuleAction& action, const std::vector<int>& word) {
  return min_poly_degree(image_of_word(action, word));
}

Enumeration enumerate_action(const ModuleAction& action, u64 cap) {
  action.check_shape();
  if (action.is_natural()) return enumerate(action.group, cap);
  const Enumeration source = enumerate(action.group, cap);
  const ElementLayout layout({{action.group.field, action.group.dim}, {action.module_field(), action.dim_v()}});
  std::vector<std::vector<Code>> gens;
  for (std::size_t i = 0; i < action.images.size(); ++i)
    gens.push_back(flatten({action.group.generators[i], action.images[i]}));
  Enumeration joint;
  try {
    joint = enumerate_elements(layout, gens, source.size());
  } catch (const EnumerationAborted&) {
    throw InconsistentAction("images do not define a homomorphism: the graph of the action exceeds |S| = " +
                             std::to_string(source.size()));
  }
  if (joint.size() != source.size())
    throw InconsistentAction("images do not define a homomorphism (" + std::to_string(joint.size()) + " pairs for " +
                             std::to_string(source.size()) + " elements)");
  return joint;
}

namespace {

struct ChunkResult {
  std::map<u64, u64> histogram;
  std::map<u64, CosetWitness> witnesses;
};

u64 checked_power(u64 base, unsigned exp) {
  try {
    return checked_pow(base, exp);
  } catch (const std::overflow_error&) {
    throw std::overflow_error("semidirect_spectrum: |V| exceeds 2^64");
  }
}

}  // namespace

SemidirectResult semidirect_spectrum(const Enumeration& joint, unsigned threads) {
  const auto& blocks = joint.layout().blocks();
  const std::size_t image_block = blocks.size() - 1;
  const FieldPtr& f = blocks[image_block].field;
  const unsigned d = blocks[image_block].dim;
  const u64 r = f->characteristic();
  const u64 v_size = checked_power(f->size(), d);

  auto results = detail::parallel_chunks<ChunkResult>(joint.size(), threads, [&](u64 lo, u64 hi, ChunkResult& out) {
    for (u64 i = lo; i < hi; ++i) {
      const u64 m = joint.order(i);
      const Matrix a = joint.matrix(i, image_block);
      Matrix n(f, d);
      Matrix power = Matrix::identity(f, d);
      for (u64 j = 0; j < m; ++j) {
        n = n + power;
        power = power * a;
      }
      const unsigned rank = n.rank();
      const u64 kernel = checked_power(f->size(), d - rank);
      out.histogram[m] += kernel;
      if (!out.witnesses.count(m))
        out.witnesses[m] = CosetWitness{i, joint.matrix(i, 0), a, std::vector<Code>(d, 0), m, m};
      if (rank == 0) continue;
      out.histogram[r * m] += v_size - kernel;
      if (!out.witnesses.count(r * m)) {
        // A basis vector e_j with N_s e_j != 0.
        unsigned col = 0;
        while ([&] {
          for (unsigned row = 0; row < d; ++row)
            if (n.at(row, col) != 0) return false;
          return true;
        }())
          ++col;
        std::vector<Code> v(d, 0);
        v[col] = 1;
        out.witnesses[r * m] = CosetWitness{i, joint.matrix(i, 0), a, v, m, r * m};
      }
    }
  });

  SemidirectResult res;
  res.r = r;
  res.source = joint.table();
  std::map<u64, u64> hist;
  for (auto& chunk : results) {
    for (auto [order, count] : chunk.histogram) hist[order] += count;
    // Chunks are in element order, so the first witness seen is the smallest index.
    for (auto& [order, w] : chunk.witnesses) res.witnesses.emplace(order, std::move(w));
  }
  res.table = make_table(hist);
  return res;
}

SemidirectResult semidirect_spectrum(const ModuleAction& action, u64 cap) {
  return semidirect_spectrum(enumerate_action(action, cap));
}

u64 affine_order(const Matrix& image, const std::vector<Code>& v, u64 bound) {
  const unsigned d = image.dim();
  if (v.size() != d) throw std::invalid_argument("affine_order: vector length does not match");
  if (d + 1 > kMaxMatrixDim) throw std::invalid_argument("affine_order: module dimension too large");
  Matrix aff(image.field(), d + 1);
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = 0; j < d; ++j) aff.set(i, j, image.at(i, j));
    aff.set(i, d, v[i]);
  }
  aff.set(d, d, 1);
  return aff.order_by_powering(bound);
}

std::optional<u64> find_fixed_point_free(const Enumeration& joint) {
  const std::size_t image_block = joint.layout().blocks().size() - 1;
  for (u64 i = 0; i < joint.size(); ++i)
    if (fixed_space_dim(joint.matrix(i, image_block)) == 0) return i;
  return std::nullopt;
}

}  // namespace omega
