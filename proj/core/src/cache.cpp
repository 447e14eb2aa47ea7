#include "gfsuper/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

#include <json.hpp>

#ifdef _WIN32
#include <process.h>
#define GFSUPER_GETPID _getpid
#else
#include <unistd.h>
#define GFSUPER_GETPID getpid
#endif

namespace gfsuper {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

FileCache::FileCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path FileCache::path_for(const std::string& key) const {
    std::ostringstream os;
    os << std::hex << fnv1a64(key) << ".json";
    return dir_ / os.str();
}

std::optional<std::string> FileCache::get(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        return j.at("value").get<std::string>();
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void FileCache::put(const std::string& key, const std::string& value) const {
    static std::atomic<unsigned> counter{0};
    nlohmann::json j;
    j["key"] = key;
    j["value"] = value;

    std::ostringstream tmpname;
    tmpname << "tmp." << GFSUPER_GETPID() << "." << counter.fetch_add(1);
    std::filesystem::path tmp = dir_ / tmpname.str();
    {
        std::ofstream out(tmp);
        out << j.dump(2) << '\n';
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            return;  // caching is best effort
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_for(key), ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace gfsuper
