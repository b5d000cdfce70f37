#include "signvec/result_cache.hpp"

#include "signvec/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace signvec {

using nlohmann::json;

std::string CacheKey::to_string() const {
    return std::to_string(profile.n) + "," + std::to_string(profile.k) + "," + std::to_string(profile.l) + "," +
           signvec::to_string(target) + "," + (pruning ? "pruned" : "unpruned");
}

CacheKey CacheKey::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 5) throw ParseError("cache key \"" + text + "\" must have five fields");
    CacheKey key;
    try {
        int* fields[] = {&key.profile.n, &key.profile.k, &key.profile.l};
        for (int f = 0; f < 3; ++f) {
            std::size_t used = 0;
            *fields[f] = std::stoi(parts[f], &used);
            if (used != parts[f].size()) throw ParseError("bad integer");
        }
    } catch (const std::exception&) {
        throw ParseError("cache key \"" + text + "\" has a non-integer profile");
    }
    if (parts[3] == "g") key.target = Target::G;
    else if (parts[3] == "m") key.target = Target::M;
    else throw ParseError("cache key \"" + text + "\" has unknown target");
    if (parts[4] == "pruned") key.pruning = true;
    else if (parts[4] == "unpruned") key.pruning = false;
    else throw ParseError("cache key \"" + text + "\" has unknown pruning flag");
    return key;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::optional<CacheEntry> ResultCache::lookup(const CacheKey& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

bool ResultCache::record(const CacheKey& key, const CacheEntry& entry) {
    auto it = entries_.find(key);
    if (it != entries_.end()) {
        const auto& old = it->second;
        if (old.status == SolveStatus::Exact && entry.status != SolveStatus::Exact) return false;
        if (old.status == entry.status && entry.status == SolveStatus::LowerBoundTimeout && entry.value < old.value)
            return false;
    }
    entries_[key] = entry;
    return true;
}

bool ResultCache::record(const CacheKey& key, const SolveResult& result) {
    return record(key, CacheEntry{result.value, result.status, utc_timestamp()});
}

std::string ResultCache::to_json() const {
    json doc = json::object();
    for (const auto& [key, e] : entries_)
        doc[key.to_string()] = {{"value", e.value}, {"status", to_string(e.status)}, {"timestamp", e.timestamp}};
    return doc.dump(2) + "\n";
}

std::map<CacheKey, CacheEntry> ResultCache::parse_json(const std::string& text) {
    std::map<CacheKey, CacheEntry> out;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("cache is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("cache root must be a JSON object");
    for (const auto& [k, v] : doc.items()) {
        const auto key = CacheKey::parse(k);
        if (!v.is_object() || !v.contains("value") || !v["value"].is_number_unsigned() || !v.contains("status") ||
            !v["status"].is_string())
            throw ParseError("cache entry \"" + k + "\" is malformed");
        CacheEntry e;
        e.value = v["value"].get<std::size_t>();
        const auto status = v["status"].get<std::string>();
        if (status == "exact") e.status = SolveStatus::Exact;
        else if (status == "lower_bound") e.status = SolveStatus::LowerBoundTimeout;
        else throw ParseError("cache entry \"" + k + "\" has unknown status \"" + status + "\"");
        if (v.contains("timestamp") && v["timestamp"].is_string()) e.timestamp = v["timestamp"].get<std::string>();
        out[key] = e;
    }
    return out;
}

ResultCache ResultCache::open(const std::string& path) {
    ResultCache cache;
    cache.path_ = path;
    if (!std::filesystem::exists(path)) return cache;
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        cache.entries_ = parse_json(buf.str());
    } catch (const ParseError& e) {
        cache.warning_ = "ignoring corrupt cache " + path + ": " + e.what();
        cache.entries_.clear();
    }
    return cache;
}

void ResultCache::save() const { save_as(path_); }

void ResultCache::save_as(const std::string& path) const {
    if (path.empty()) throw InputError("result cache has no path");
    const auto tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write cache file " + path);
        out << to_json();
        if (!out) throw InputError("error while writing cache file " + path);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw InputError("cannot replace cache file " + path + ": " + ec.message());
}

} // namespace signvec
