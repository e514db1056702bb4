#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mgw::cli {

std::uint64_t fnv1a(std::string_view bytes);
std::string fnv1a_hex(std::string_view bytes);

struct CacheKey {
    int n = 0;
    int a = 0;
    std::string series_id;
    int u_order = 0;
};

struct CacheStat {
    std::size_t entries = 0;
    std::size_t invalid = 0;  // unreadable, stale version or digest mismatch
    std::uintmax_t bytes = 0;
};

// One JSON file per entry, holding rationals as "num/den" strings. Entries with
// another format version or a digest that does not match the payload are misses.
class SeriesCache {
public:
    static constexpr int format_version = 1;

    explicit SeriesCache(std::filesystem::path dir);

    const std::filesystem::path& directory() const { return dir_; }
    std::optional<std::vector<std::string>> load(const CacheKey& key) const;
    void store(const CacheKey& key, const std::vector<std::string>& payload);
    CacheStat stat() const;
    std::size_t clear();

private:
    std::filesystem::path entry_path(const CacheKey& key) const;

    std::filesystem::path dir_;
    std::mutex write_mutex_;
};

}  // namespace mgw::cli
