// Disk cache for Gram/right-hand-side entries: one JSON file per
// (kind, j, k, precision), carrying the scalar payload in hex-float form, a
// checksum for corruption detection, and enough metadata to audit precision.
// Writes are write-then-rename, so concurrent builders are safe.

#ifndef BERGMAN_CACHE_HPP
#define BERGMAN_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace bergman {

struct CacheKey {
  std::string kind;       // "gram" or "rhs"
  std::int64_t j = 0;     // 0 when unused (rhs)
  std::int64_t k = 0;
  std::string precision;  // "digamma" or "direct"
  std::int64_t truncation = 0;  // 0 for digamma

  std::string file_name() const;
};

class EntryCache {
 public:
  /// Empty directory disables caching.
  explicit EntryCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& directory() const { return dir_; }

  /// Returns the cached value, or nullopt when absent or corrupted
  /// (corrupted entries are treated as misses and recomputed).
  std::optional<double> load(const CacheKey& key) const;
  void store(const CacheKey& key, double value) const;

 private:
  std::filesystem::path dir_;
};

std::uint64_t fnv1a64(const std::string& data);

}  // namespace bergman

#endif  // BERGMAN_CACHE_HPP
