#include "omega/store.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <nlohmann/json.hpp>

#include "omega/classical.hpp"

namespace omega {

namespace {

constexpr char kMagic[6] = {'O', 'M', 'E', 'G', 'A', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::ostream& os, u64 v) {
  for (int i = 0; i < 8; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

u64 get_le(std::istream& is, int bytes) {
  u64 v = 0;
  for (int i = 0; i < bytes; ++i) {
    const int c = is.get();
    if (c == EOF) throw CacheError("cache file is truncated");
    v |= static_cast<u64>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return v;
}

std::string sanitize(const std::string& spec) {
  std::string out;
  for (char c : spec) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

std::filesystem::path sidecar(const std::filesystem::path& p) { return p.string() + ".json"; }

}  // namespace

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& spec, u64 cap) {
  return dir / (sanitize(spec) + ".cap" + std::to_string(cap) + ".omega");
}

void save_enumeration(const std::filesystem::path& dir, const std::string& spec, u64 cap, const Enumeration& e) {
  std::filesystem::create_directories(dir);
  const auto path = cache_path(dir, spec, cap);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw CacheError("cannot write " + tmp);
    os.write(kMagic, sizeof kMagic);
    put_u32(os, static_cast<std::uint32_t>(spec.size()));
    os.write(spec.data(), static_cast<std::streamsize>(spec.size()));
    put_u64(os, cap);
    const auto& blocks = e.layout().blocks();
    put_u32(os, static_cast<std::uint32_t>(blocks.size()));
    for (const auto& b : blocks) {
      put_u64(os, b.field->characteristic());
      put_u32(os, b.field->degree());
      put_u32(os, b.dim);
      put_u32(os, static_cast<std::uint32_t>(b.field->modulus().size()));
      for (unsigned c : b.field->modulus()) put_u32(os, c);
    }
    put_u64(os, e.size());
    const auto widths = e.layout().key_widths();
    for (u64 i = 0; i < e.size(); ++i) {
      const auto el = e.element(i);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::size_t start = e.layout().offset(b);
        const std::size_t len = std::size_t{blocks[b].dim} * blocks[b].dim;
        for (std::size_t j = 0; j < len; ++j) {
          const Code c = el[start + j];
          os.put(static_cast<char>(c & 0xFF));
          if (widths[b] == 2) os.put(static_cast<char>(c >> 8));
        }
      }
    }
    if (!os) throw CacheError("failed writing " + tmp);
  }
  std::filesystem::rename(tmp, path);

  nlohmann::json side;
  side["spec"] = spec;
  side["cap"] = cap;
  side["layout"] = e.layout().describe();
  side["size"] = e.size();
  nlohmann::json hist = nlohmann::json::object();
  for (auto [order, count] : e.table().order_histogram) hist[std::to_string(order)] = count;
  side["order_histogram"] = hist;
  side["spectrum"] = e.table().spectrum;
  std::ofstream js(sidecar(path), std::ios::trunc);
  js << side.dump(2) << '\n';
}

std::optional<Enumeration> load_enumeration(const std::filesystem::path& dir, const std::string& spec, u64 cap) {
  const auto path = cache_path(dir, spec, cap);
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream is(path, std::ios::binary);
  if (!is) throw CacheError("cannot read " + path.string());
  char magic[sizeof kMagic];
  if (!is.read(magic, sizeof magic) || !std::equal(magic, magic + sizeof magic, kMagic))
    throw CacheError(path.string() + ": bad magic");
  const auto len = get_le(is, 4);
  if (len > 4096) throw CacheError(path.string() + ": corrupt header");
  std::string stored(len, '\0');
  if (!is.read(stored.data(), static_cast<std::streamsize>(len))) throw CacheError("cache file is truncated");
  if (stored != spec) throw CacheError(path.string() + ": header names '" + stored + "', expected '" + spec + "'");
  if (get_le(is, 8) != cap) throw CacheError(path.string() + ": header cap differs");
  const auto nblocks = get_le(is, 4);
  if (nblocks == 0 || nblocks > 8) throw CacheError(path.string() + ": corrupt header");
  std::vector<Block> blocks;
  for (u64 b = 0; b < nblocks; ++b) {
    const u64 p = get_le(is, 8);
    const auto k = static_cast<unsigned>(get_le(is, 4));
    const auto dim = static_cast<unsigned>(get_le(is, 4));
    const auto mlen = get_le(is, 4);
    if (mlen > 64) throw CacheError(path.string() + ": corrupt header");
    std::vector<unsigned> modulus;
    for (u64 i = 0; i < mlen; ++i) modulus.push_back(static_cast<unsigned>(get_le(is, 4)));
    FieldPtr f;
    try {
      f = build_field(p, k);
    } catch (const std::invalid_argument& e) {
      throw CacheError(path.string() + ": " + e.what());
    }
    if (f->modulus() != modulus) throw CacheError(path.string() + ": field modulus differs");
    blocks.push_back({f, dim});
  }
  ElementLayout layout;
  try {
    layout = ElementLayout(blocks);
  } catch (const std::invalid_argument& e) {
    throw CacheError(path.string() + ": " + e.what());
  }
  const u64 count = get_le(is, 8);
  if (count == 0 || count > cap) throw CacheError(path.string() + ": bad element count");
  const auto widths = layout.key_widths();
  std::vector<Code> arena;
  arena.reserve(count * layout.width());
  for (u64 i = 0; i < count; ++i)
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::size_t len = std::size_t{blocks[b].dim} * blocks[b].dim;
      for (std::size_t j = 0; j < len; ++j) {
        const auto c = static_cast<Code>(get_le(is, static_cast<int>(widths[b])));
        if (c >= blocks[b].field->size()) throw CacheError(path.string() + ": invalid field element");
        arena.push_back(c);
      }
    }
  if (is.peek() != EOF) throw CacheError(path.string() + ": trailing bytes");
  const std::size_t w = layout.width();
  for (u64 i = 1; i < count; ++i) {
    const Code* prev = arena.data() + (i - 1) * w;
    if (!std::lexicographical_compare(prev, prev + w, prev + w, prev + 2 * w))
      throw CacheError(path.string() + ": elements are not strictly sorted");
  }
  Enumeration e;
  try {
    e = Enumeration(layout, std::move(arena));
  } catch (const std::logic_error& ex) {
    throw CacheError(path.string() + ": " + ex.what());
  }

  std::ifstream js(sidecar(path));
  if (js) {
    nlohmann::json side;
    try {
      side = nlohmann::json::parse(js);
    } catch (const nlohmann::json::exception& ex) {
      throw CacheError(sidecar(path).string() + ": " + ex.what());
    }
    nlohmann::json hist = nlohmann::json::object();
    for (auto [order, c] : e.table().order_histogram) hist[std::to_string(order)] = c;
    if (side.value("order_histogram", nlohmann::json()) != hist)
      throw CacheError(sidecar(path).string() + ": histogram disagrees with the stored elements");
  }
  return e;
}

EnumerationStore::EnumerationStore(u64 cap, std::optional<std::filesystem::path> cache_dir)
    : cap_(cap), cache_dir_(std::move(cache_dir)) {}

std::shared_ptr<const MatrixGroup> EnumerationStore::group(const GroupSpec& spec) {
  GroupSpec u = spec;
  u.version = Version::Universal;
  const std::string key = to_string(u);
  std::lock_guard lock(mu_);
  auto& slot = groups_[key];
  if (!slot) slot = std::make_shared<const MatrixGroup>(classical_generators(u));
  return slot;
}

std::shared_ptr<const Enumeration> EnumerationStore::universal(const GroupSpec& spec) {
  GroupSpec u = spec;
  u.version = Version::Universal;
  const std::string key = to_string(u);
  const auto gens = group(u);
  std::lock_guard lock(mu_);
  auto& slot = enumerations_[key];
  if (slot) return slot;
  if (cache_dir_) {
    if (auto cached = load_enumeration(*cache_dir_, key, cap_)) {
      const auto expected = group_order(u).value();
      if (expected && cached->size() != *expected) throw CacheError("cached " + key + " has the wrong size");
      slot = std::make_shared<const Enumeration>(std::move(*cached));
      return slot;
    }
  }
  auto e = std::make_shared<const Enumeration>(enumerate(*gens, cap_));
  if (cache_dir_) save_enumeration(*cache_dir_, key, cap_, *e);
  slot = e;
  return slot;
}

ElementTable EnumerationStore::table(const GroupSpec& spec) {
  const std::string key = to_string(spec);
  {
    std::lock_guard lock(mu_);
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  }
  const auto e = universal(spec);
  ElementTable t;
  if (spec.version == Version::Universal) {
    t = e->table();
  } else {
    const auto center = center_of(*e, *group(spec));
    if (center.size() != spec.center_order())
      throw std::logic_error("centre of " + key + " has " + std::to_string(center.size()) + " elements, expected " +
                             std::to_string(spec.center_order()));
    t = quotient_spectrum(*e, center);
  }
  std::lock_guard lock(mu_);
  tables_[key] = t;
  return t;
}

}  // namespace omega
