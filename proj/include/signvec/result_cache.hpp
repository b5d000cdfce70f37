#pragma once

// Persistent map from solved instances to their values, stored as JSON:
//   { "n,k,l,target,pruning": {"value": V, "status": "exact"|"lower_bound", "timestamp": "..."} }
// Lower bounds from timed-out runs are kept until a larger bound or an exact
// value replaces them; exact values are never overwritten by lower bounds.

#include "signvec/signed_vector.hpp"
#include "signvec/solver.hpp"

#include <map>
#include <optional>
#include <string>

namespace signvec {

struct CacheKey {
    Profile profile;
    Target target = Target::G;
    bool pruning = true;

    [[nodiscard]] std::string to_string() const;
    /// Throws ParseError on malformed keys.
    static CacheKey parse(const std::string& text);
    friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

struct CacheEntry {
    std::size_t value = 0;
    SolveStatus status = SolveStatus::Exact;
    std::string timestamp; ///< UTC, ISO 8601
    friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

class ResultCache {
public:
    ResultCache() = default;

    /// Loads `path` if it exists. A file that cannot be parsed is discarded with a
    /// warning in `warning()` and the cache starts empty.
    static ResultCache open(const std::string& path);

    [[nodiscard]] std::optional<CacheEntry> lookup(const CacheKey& key) const;
    /// Stores the entry unless it would downgrade what is already there. Returns true if stored.
    bool record(const CacheKey& key, const CacheEntry& entry);
    bool record(const CacheKey& key, const SolveResult& result);

    /// Throws InputError if the file cannot be written.
    void save() const;
    void save_as(const std::string& path) const;

    [[nodiscard]] const std::map<CacheKey, CacheEntry>& entries() const noexcept { return entries_; }
    [[nodiscard]] const std::string& path() const noexcept { return path_; }
    [[nodiscard]] const std::string& warning() const noexcept { return warning_; }

    [[nodiscard]] std::string to_json() const;
    /// Throws ParseError on malformed documents.
    static std::map<CacheKey, CacheEntry> parse_json(const std::string& text);

private:
    std::string path_;
    std::string warning_;
    std::map<CacheKey, CacheEntry> entries_;
};

[[nodiscard]] std::string utc_timestamp();

} // namespace signvec
