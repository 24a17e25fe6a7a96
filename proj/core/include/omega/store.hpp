// On-disk enumeration cache and an in-memory memo of enumerated groups.
//
// Binary layout (little endian):
//   "OMEGA1" | u32 len, spec string | u64 cap | u32 blocks |
//   per block: u64 p, u32 k, u32 dim, u32 len, len x u32 modulus coefficients |
//   u64 count | count sorted keys, each dim^2 codes per block at 1 byte
//   (|F| <= 256) or 2 bytes per code.
// The order histogram is written to a JSON sidecar next to the binary.

#ifndef OMEGA_STORE_HPP_
#define OMEGA_STORE_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "omega/matrix_group.hpp"

namespace omega {

class CacheError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Path of the binary cache file for (spec, cap); the sidecar is the same
/// path with ".json" appended.
std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& spec, u64 cap);

void save_enumeration(const std::filesystem::path& dir, const std::string& spec, u64 cap, const Enumeration& e);

/// nullopt when no cache file exists. Throws CacheError when the header
/// names a different spec or cap, the field description disagrees, the file
/// is truncated, or the recomputed histogram disagrees with the sidecar.
std::optional<Enumeration> load_enumeration(const std::filesystem::path& dir, const std::string& spec, u64 cap);

/// Thread-safe memo of enumerated classical groups (families A, 2A, C),
/// optionally backed by the on-disk cache.
class EnumerationStore {
public:
  explicit EnumerationStore(u64 cap = kDefaultEnumerationCap,
                            std::optional<std::filesystem::path> cache_dir = std::nullopt);

  u64 cap() const { return cap_; }
  const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }

  /// Generators of the universal group of the GroupSpec.
  std::shared_ptr<const MatrixGroup> group(const GroupSpec& spec);
  /// Enumeration of the universal group of the GroupSpec.
  std::shared_ptr<const Enumeration> universal(const GroupSpec& spec);
  /// Element table of the group named by the GroupSpec; for the simple version
  /// this is the quotient by the centre.
  ElementTable table(const GroupSpec& spec);

private:
  u64 cap_;
  std::optional<std::filesystem::path> cache_dir_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const MatrixGroup>> groups_;
  std::map<std::string, std::shared_ptr<const Enumeration>> enumerations_;
  std::map<std::string, ElementTable> tables_;
};

}  // namespace omega

#endif  // OMEGA_STORE_HPP_
