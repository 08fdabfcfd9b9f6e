#pragma once

// Append-only JSONL cache of sweep results, keyed by (n, t, d, schema_version).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include <json.hpp>

#include "serialization.hpp"
#include "sweep.hpp"

namespace nakayama {

class ResultCache {
public:
    using Key = std::tuple<int, int, int>;

    explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

    /// $NAKAYAMA_CY_CACHE, else ./cy-cache.jsonl
    static std::filesystem::path default_path()
    {
        if (const char* env = std::getenv("NAKAYAMA_CY_CACHE"); env && *env)
            return env;
        return "cy-cache.jsonl";
    }

    const std::filesystem::path& path() const noexcept { return path_; }

    /// Records written at the current schema version.  Lines that fail to
    /// parse (e.g. a torn final write) are ignored.
    std::map<Key, PointReport> load() const
    {
        std::map<Key, PointReport> out;
        std::ifstream in(path_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            try {
                const auto j = nlohmann::json::parse(line);
                if (j.value("schema_version", "") != schema_version)
                    continue;
                auto r = j.get<PointReport>();
                out[{r.n, r.t, r.d}] = std::move(r);
            } catch (const nlohmann::json::exception&) {
                continue;
            }
        }
        return out;
    }

    void append(const PointReport& r)
    {
        const std::string line = nlohmann::json(r).dump();
        std::lock_guard lock(mutex_);
        std::ofstream out(path_, std::ios::app);
        out << line << '\n';
    }

private:
    std::filesystem::path path_;
    std::mutex mutex_;
};

} // namespace nakayama
