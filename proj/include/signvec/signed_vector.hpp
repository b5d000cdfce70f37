#pragma once

// Signed {0,+1,-1} vectors with fixed numbers of +1 and -1 coordinates.
//
// Coordinates are 1-indexed: a vector of dimension n lives on [1..n]. A vector
// is stored as two disjoint bit sets (positive and negative support), so
// scalar products and support intersections are popcounts.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#ifndef SIGNVEC_MAX_DIM
#define SIGNVEC_MAX_DIM 128
#endif

namespace signvec {

inline constexpr int kMaxDim = SIGNVEC_MAX_DIM;
static_assert(kMaxDim > 0 && kMaxDim % 64 == 0, "SIGNVEC_MAX_DIM must be a positive multiple of 64");

/// Fixed-width set of coordinate indices in [1..kMaxDim].
class IndexSet {
public:
    static constexpr int kWords = kMaxDim / 64;

    constexpr IndexSet() = default;

    [[nodiscard]] bool contains(int i) const noexcept {
        const int b = i - 1;
        return (words_[b >> 6] >> (b & 63)) & 1u;
    }
    void insert(int i) noexcept {
        const int b = i - 1;
        words_[b >> 6] |= std::uint64_t{1} << (b & 63);
    }
    void erase(int i) noexcept {
        const int b = i - 1;
        words_[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
    }

    [[nodiscard]] int size() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    [[nodiscard]] bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    /// Number of members in [1..p].
    [[nodiscard]] int count_prefix(int p) const noexcept;
    /// Largest member, or 0 when empty.
    [[nodiscard]] int max_element() const noexcept;
    /// Members in increasing order.
    [[nodiscard]] std::vector<int> to_vector() const;

    /// {1..n}
    static IndexSet range(int n) noexcept;

    friend IndexSet operator&(IndexSet a, const IndexSet& b) noexcept {
        for (int i = 0; i < kWords; ++i) a.words_[i] &= b.words_[i];
        return a;
    }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) noexcept {
        for (int i = 0; i < kWords; ++i) a.words_[i] |= b.words_[i];
        return a;
    }
    /// Set difference a \ b.
    friend IndexSet operator-(IndexSet a, const IndexSet& b) noexcept {
        for (int i = 0; i < kWords; ++i) a.words_[i] &= ~b.words_[i];
        return a;
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    /// Orders by the numeric value of the bit pattern (coordinate i is bit i-1).
    friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) noexcept {
        for (int i = kWords - 1; i >= 0; --i)
            if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
        return std::strong_ordering::equal;
    }

    [[nodiscard]] std::size_t hash() const noexcept;

private:
    std::array<std::uint64_t, kWords> words_{};
};

/// The class V(n,k,l): dimension n, k coordinates +1, l coordinates -1.
struct Profile {
    int n = 0;
    int k = 0;
    int l = 0;

    /// Throws InputError unless 1 <= n <= kMaxDim, k >= 1, l >= 0, n >= k + l.
    void validate() const;
    /// validate() plus k > l >= 1, the standing assumption for g(n,k,l).
    void validate_for_g() const;

    [[nodiscard]] std::string to_string() const;
    friend auto operator<=>(const Profile&, const Profile&) = default;
};

/// A {0,+1,-1} vector held as disjoint positive and negative supports.
class SignedVector {
public:
    SignedVector() = default;
    /// Throws InputError if the supports overlap or leave [1..dim].
    SignedVector(int dim, IndexSet pos, IndexSet neg);

    /// Builds from explicit coordinate values (each in {-1,0,1}); values[0] is coordinate 1.
    static SignedVector from_values(const std::vector<int>& values);

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] const IndexSet& pos() const noexcept { return pos_; }
    [[nodiscard]] const IndexSet& neg() const noexcept { return neg_; }
    [[nodiscard]] int plus_count() const noexcept { return pos_.size(); }
    [[nodiscard]] int minus_count() const noexcept { return neg_.size(); }

    /// Coordinate value at 1-based index i.
    [[nodiscard]] int operator[](int i) const noexcept {
        return pos_.contains(i) ? 1 : (neg_.contains(i) ? -1 : 0);
    }
    [[nodiscard]] std::vector<int> values() const;

    [[nodiscard]] bool fits(const Profile& p) const noexcept {
        return dim_ == p.n && plus_count() == p.k && minus_count() == p.l;
    }

    friend bool operator==(const SignedVector&, const SignedVector&) = default;
    /// Canonical order: dimension, then positive support, then negative support (as bit patterns).
    friend std::strong_ordering operator<=>(const SignedVector& a, const SignedVector& b) noexcept {
        if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
        if (auto c = a.pos_ <=> b.pos_; c != 0) return c;
        return a.neg_ <=> b.neg_;
    }

private:
    int dim_ = 0;
    IndexSet pos_;
    IndexSet neg_;
};

struct IndexSetHash {
    std::size_t operator()(const IndexSet& s) const noexcept { return s.hash(); }
};

struct SignedVectorHash {
    std::size_t operator()(const SignedVector& v) const noexcept {
        return v.pos().hash() * 1000003u ^ v.neg().hash() ^ static_cast<std::size_t>(v.dim());
    }
};

/// A deduplicated, canonically sorted set of vectors of one profile.
class VectorFamily {
public:
    VectorFamily() = default;
    explicit VectorFamily(Profile profile);
    /// Validates every member against the profile, then sorts and deduplicates.
    VectorFamily(Profile profile, std::vector<SignedVector> members);

    [[nodiscard]] const Profile& profile() const noexcept { return profile_; }
    [[nodiscard]] const std::vector<SignedVector>& members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
    [[nodiscard]] auto end() const noexcept { return members_.end(); }
    [[nodiscard]] const SignedVector& operator[](std::size_t i) const { return members_[i]; }

    [[nodiscard]] bool contains(const SignedVector& v) const;
    /// Position of v in canonical order, if present.
    [[nodiscard]] std::optional<std::size_t> index_of(const SignedVector& v) const;

    friend bool operator==(const VectorFamily&, const VectorFamily&) = default;

private:
    Profile profile_;
    std::vector<SignedVector> members_;
};

/// Every vector of the profile, in canonical order.
[[nodiscard]] VectorFamily enumerate_all(const Profile& profile);

/// Sum of coordinate products. Throws InputError on dimension mismatch.
[[nodiscard]] int scalar_product(const SignedVector& v, const SignedVector& w);

[[nodiscard]] inline IndexSet support(const SignedVector& v) { return v.pos() | v.neg(); }

/// Coordinates a..b of v, reindexed to [1..b-a+1].
[[nodiscard]] SignedVector restrict_to(const SignedVector& v, int a, int b);

/// Coordinatewise sign flip.
[[nodiscard]] inline SignedVector negate(const SignedVector& v) { return {v.dim(), v.neg(), v.pos()}; }

/// Minimum over i in [1..dim] of the suffix sum v_i + ... + v_dim (the degree of interlacedness).
[[nodiscard]] int lambda(const SignedVector& v);

struct SuffixMarkers {
    int i_prime = 0; ///< largest i whose suffix sum is -1
    int i_count = 0; ///< number of -1 coordinates in [i_prime..dim]
    friend bool operator==(const SuffixMarkers&, const SuffixMarkers&) = default;
};

/// Present iff some suffix sum equals -1 (always the case when lambda(v) <= -1).
[[nodiscard]] std::optional<SuffixMarkers> suffix_markers(const SignedVector& v);

/// Parses a string over {'+', '-', '0'}; the Unicode minus sign U+2212 is accepted for '-'.
[[nodiscard]] SignedVector parse_vector(std::string_view text);
[[nodiscard]] std::string format_vector(const SignedVector& v);

/// Family file: a header line "n k l", then one vector per line.
[[nodiscard]] VectorFamily read_family(std::istream& in);
void write_family(std::ostream& out, const VectorFamily& family);
[[nodiscard]] VectorFamily read_family_file(const std::string& path);
void write_family_file(const std::string& path, const VectorFamily& family);

} // namespace signvec
