#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace gfsuper {

// Folded into every cache key by callers; bump to invalidate old entries.
inline constexpr const char* kCacheVersion = "gfsuper-cache-1";

std::uint64_t fnv1a64(std::string_view s);

// One JSON file per entry, named by the FNV-1a hash of the key. Writes go
// through a temp file and an atomic rename; the stored key is compared on
// read, so a hash collision or a corrupt file degrades to a miss.
class FileCache {
  public:
    explicit FileCache(std::filesystem::path dir);
    const std::filesystem::path& dir() const { return dir_; }
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value) const;

  private:
    std::filesystem::path path_for(const std::string& key) const;
    std::filesystem::path dir_;
};

}  // namespace gfsuper
