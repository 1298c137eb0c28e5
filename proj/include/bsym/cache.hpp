#pragma once

// Persistent result cache: one JSON object per line, appended. Records carry
// (q, b, n, d, method, direction, value, certified, version, timestamp).
// When several lines share a key, a certified record beats an uncertified one
// and otherwise the last line wins.

#include "bsym/bounds.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace bsym {

inline constexpr const char* kToolVersion = "1.0.0";

struct CacheRecord {
    std::uint32_t q = 2;
    std::size_t b = 1;
    std::size_t n = 1;
    std::size_t d = 1;
    std::string method;
    std::string direction;  // "upper", "lower" or "exact"
    BigInt value = 0;
    bool certified = false;
    std::string version = kToolVersion;
    std::string timestamp;  // UTC, ISO 8601

    std::string to_json_line() const;
    /// Throws ParseError on a malformed line.
    static CacheRecord from_json_line(const std::string& line, std::size_t line_number = 0);
};

class ResultCache {
public:
    using Key = std::tuple<std::uint32_t, std::size_t, std::size_t, std::size_t, std::string>;

    /// Flag value if given, else $BSB_CACHE, else ./bsb-cache.jsonl.
    static std::string resolve_path(const std::optional<std::string>& flag);

    /// A missing file is an empty cache; unreadable or malformed files throw.
    explicit ResultCache(std::string path);

    const std::string& path() const noexcept { return path_; }
    std::optional<CacheRecord> find(const Key& key) const;
    const std::map<Key, CacheRecord>& records() const noexcept { return records_; }

    /// Appends unless an existing certified record would be shadowed by an
    /// uncertified one. Returns whether a line was written. Throws IoError.
    bool put(CacheRecord record);

    /// Certified search records as exact values, uncertified ones as witnesses.
    KnownValues known_values() const;

private:
    void merge(CacheRecord record);

    std::string path_;
    std::map<Key, CacheRecord> records_;
};

std::string utc_timestamp();

}  // namespace bsym
