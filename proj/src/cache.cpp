#include "pdet/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pdet/errors.hpp"
#include "pdet/series_io.hpp"

namespace pdet {

namespace fs = std::filesystem;

std::string fnv1a64_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

CoefficientCache::CoefficientCache(std::string dir) : dir_(std::move(dir)) {
    if (dir_.empty()) throw InputError("cache directory must not be empty");
    fs::create_directories(dir_);
}

std::string CoefficientCache::file_for(const Key& key) const {
    return (fs::path(dir_) /
            (key.op_hash + "_" + key.pipeline + "_" + std::to_string(key.order) + ".series"))
        .string();
}

std::optional<TruncSeries> CoefficientCache::load(const Key& key) const {
    std::ifstream in(file_for(key));
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(header);
        if (j.at("format_version").get<int>() != 1) return std::nullopt;
        if (j.at("op_hash").get<std::string>() != key.op_hash ||
            j.at("pipeline").get<std::string>() != key.pipeline ||
            j.at("order").get<int>() != key.order)
            return std::nullopt;
        std::ostringstream rest;
        rest << in.rdbuf();
        return parse_trunc_series(rest.str());
    } catch (const std::exception&) {
        return std::nullopt; // unreadable entries behave like misses
    }
}

void CoefficientCache::store(const Key& key, const TruncSeries& series) const {
    nlohmann::json j;
    j["format_version"] = 1;
    j["op_hash"] = key.op_hash;
    j["pipeline"] = key.pipeline;
    j["order"] = key.order;
    j["certified_order"] = series.order();

    std::string final_path = file_for(key);
    std::string tmp = final_path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw InputError("cannot write cache file: " + tmp);
        out << j.dump() << "\n" << series_to_text(series);
    }
    fs::rename(tmp, final_path);
}

} // namespace pdet
