#ifndef PDET_CACHE_HPP
#define PDET_CACHE_HPP

#include <optional>
#include <string>

#include "pdet/trunc_series.hpp"

namespace pdet {

std::string fnv1a64_hex(const std::string& bytes);

/// One file per (operator hash, pipeline, order) under a cache directory:
/// a JSON header line followed by the series serialization. Writes go to
/// a temporary file first and are renamed into place, so concurrent
/// readers see either the old or the complete new content.
class CoefficientCache {
public:
    explicit CoefficientCache(std::string dir);

    struct Key {
        std::string op_hash; // fnv1a64 of the canonical operator json
        std::string pipeline;
        int order = 0;
    };

    std::optional<TruncSeries> load(const Key& key) const;
    void store(const Key& key, const TruncSeries& series) const;

    const std::string& dir() const { return dir_; }

private:
    std::string file_for(const Key& key) const;
    std::string dir_;
};

} // namespace pdet

#endif
