#include "cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace mgw::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr const char* entry_prefix = "mgw-";

ordered_json key_json(const CacheKey& key) {
    ordered_json k;
    k["n"] = key.n;
    k["a"] = key.a;
    k["series_id"] = key.series_id;
    k["u_order"] = key.u_order;
    k["format_version"] = SeriesCache::format_version;
    return k;
}

std::optional<ordered_json> read_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    ordered_json j = ordered_json::parse(in, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    return j;
}

bool entry_valid(const ordered_json& j) {
    if (!j.is_object() || !j.contains("format_version") || !j.contains("payload") || !j.contains("digest"))
        return false;
    if (j["format_version"] != SeriesCache::format_version) return false;
    if (!j["payload"].is_array() || !j["digest"].is_string()) return false;
    return j["digest"].get<std::string>() == fnv1a_hex(j["payload"].dump());
}

bool is_entry_file(const fs::directory_entry& e) {
    const std::string name = e.path().filename().string();
    return e.is_regular_file() && name.rfind(entry_prefix, 0) == 0 && e.path().extension() == ".json";
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
    return buf;
}

SeriesCache::SeriesCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path SeriesCache::entry_path(const CacheKey& key) const {
    return dir_ / (entry_prefix + fnv1a_hex(key_json(key).dump()) + ".json");
}

std::optional<std::vector<std::string>> SeriesCache::load(const CacheKey& key) const {
    auto j = read_json(entry_path(key));
    if (!j || !entry_valid(*j) || (*j)["key"] != key_json(key)) return std::nullopt;
    std::vector<std::string> out;
    for (const auto& v : (*j)["payload"]) {
        if (!v.is_string()) return std::nullopt;
        out.push_back(v.get<std::string>());
    }
    return out;
}

void SeriesCache::store(const CacheKey& key, const std::vector<std::string>& payload) {
    ordered_json j;
    j["format_version"] = format_version;
    j["key"] = key_json(key);
    j["payload"] = payload;
    j["digest"] = fnv1a_hex(j["payload"].dump());

    std::lock_guard lock(write_mutex_);
    fs::create_directories(dir_);
    const fs::path target = entry_path(key);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
        out << j.dump(1) << '\n';
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    }
    fs::rename(tmp, target);
}

CacheStat SeriesCache::stat() const {
    CacheStat s;
    std::error_code ec;
    if (!fs::is_directory(dir_, ec)) return s;
    for (const auto& e : fs::directory_iterator(dir_)) {
        if (!is_entry_file(e)) continue;
        ++s.entries;
        s.bytes += e.file_size();
        auto j = read_json(e.path());
        if (!j || !entry_valid(*j)) ++s.invalid;
    }
    return s;
}

std::size_t SeriesCache::clear() {
    std::lock_guard lock(write_mutex_);
    std::error_code ec;
    if (!fs::is_directory(dir_, ec)) return 0;
    std::vector<fs::path> doomed;
    for (const auto& e : fs::directory_iterator(dir_))
        if (is_entry_file(e)) doomed.push_back(e.path());
    for (const auto& p : doomed) fs::remove(p);
    return doomed.size();
}

}  // namespace mgw::cli
