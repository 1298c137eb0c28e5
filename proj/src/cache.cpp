#include "bsym/cache.hpp"

#include "bsym/error.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

namespace bsym {

using nlohmann::json;

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string CacheRecord::to_json_line() const {
    // Values are stored as decimal strings; they can outgrow 64 bits.
    json j = {{"q", q},           {"b", b},
              {"n", n},           {"d", d},
              {"method", method}, {"direction", direction},
              {"value", value.get_str()}, {"certified", certified},
              {"version", version}, {"timestamp", timestamp}};
    return j.dump();
}

CacheRecord CacheRecord::from_json_line(const std::string& line, std::size_t line_number) {
    try {
        const json j = json::parse(line);
        CacheRecord r;
        r.q = j.at("q").get<std::uint32_t>();
        r.b = j.at("b").get<std::size_t>();
        r.n = j.at("n").get<std::size_t>();
        r.d = j.at("d").get<std::size_t>();
        r.method = j.at("method").get<std::string>();
        r.direction = j.at("direction").get<std::string>();
        const auto& v = j.at("value");
        r.value = BigInt(v.is_string() ? v.get<std::string>() : v.dump());
        r.certified = j.at("certified").get<bool>();
        r.version = j.value("version", "");
        r.timestamp = j.value("timestamp", "");
        return r;
    } catch (const json::exception& e) {
        throw ParseError(line_number, std::string("bad cache record: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError(line_number, "bad cache value");
    }
}

std::string ResultCache::resolve_path(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return *flag;
    if (const char* env = std::getenv("BSB_CACHE"); env && *env) return env;
    return "bsb-cache.jsonl";
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        merge(CacheRecord::from_json_line(line, number));
    }
    if (in.bad()) throw IoError("cannot read cache '" + path_ + "'");
}

void ResultCache::merge(CacheRecord record) {
    Key key{record.q, record.b, record.n, record.d, record.method};
    auto it = records_.find(key);
    if (it != records_.end() && it->second.certified && !record.certified) return;
    records_.insert_or_assign(std::move(key), std::move(record));
}

std::optional<CacheRecord> ResultCache::find(const Key& key) const {
    if (auto it = records_.find(key); it != records_.end()) return it->second;
    return std::nullopt;
}

bool ResultCache::put(CacheRecord record) {
    const Key key{record.q, record.b, record.n, record.d, record.method};
    if (auto it = records_.find(key); it != records_.end() && it->second.certified && !record.certified) return false;
    if (record.timestamp.empty()) record.timestamp = utc_timestamp();
    std::ofstream out(path_, std::ios::app);
    if (!out) throw IoError("cannot write cache '" + path_ + "'");
    out << record.to_json_line() << '\n';
    if (!out) throw IoError("cannot write cache '" + path_ + "'");
    merge(std::move(record));
    return true;
}

KnownValues ResultCache::known_values() const {
    KnownValues known;
    for (const auto& [key, r] : records_) {
        if (r.method != "search") continue;
        try {
            const Params p(r.q, r.b, r.n, r.d);
            if (r.certified) known.set_exact(p, r.value);
            else known.add_witness(p, r.value);
        } catch (const ParameterError&) {
            // A hand-edited line with impossible parameters carries no information.
        }
    }
    return known;
}

}  // namespace bsym
