#pragma once

// Bipartite comparison graphs between a plus-ended class and a minus-ended
// class, biregularity checks, and the averaging inequality
//   |I ∩ B| + alpha |I ∩ A| <= alpha |A|   for alpha >= |B|/|A|
// for independent sets I of biregular graphs.

#include "signvec/formulas.hpp"
#include "signvec/signed_vector.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace signvec {

class BipartiteGraph {
public:
    BipartiteGraph() = default;
    /// Abstract sides 0..a_size-1 and 0..b_size-1.
    BipartiteGraph(std::size_t a_size, std::size_t b_size);
    /// Sides carrying vector families.
    BipartiteGraph(VectorFamily a, VectorFamily b);

    /// Throws InputError on out-of-range indices; duplicate edges are ignored.
    void add_edge(std::size_t a, std::size_t b);

    [[nodiscard]] std::size_t a_size() const noexcept { return a_adj_.size(); }
    [[nodiscard]] std::size_t b_size() const noexcept { return b_adj_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<std::size_t>& a_neighbours(std::size_t a) const { return a_adj_[a]; }
    [[nodiscard]] const std::vector<std::size_t>& b_neighbours(std::size_t b) const { return b_adj_[b]; }
    [[nodiscard]] bool has_edge(std::size_t a, std::size_t b) const;
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    [[nodiscard]] const std::optional<VectorFamily>& a_family() const noexcept { return a_family_; }
    [[nodiscard]] const std::optional<VectorFamily>& b_family() const noexcept { return b_family_; }

private:
    std::vector<std::vector<std::size_t>> a_adj_, b_adj_;
    std::size_t edges_ = 0;
    std::optional<VectorFamily> a_family_, b_family_;
};

/// A = X^{t,m}, B = Y^{t,m} over the profile (dimension n+1), joined at product -2l.
/// Throws DegenerateInstance if either side is empty.
[[nodiscard]] BipartiteGraph build_G_tm(const Profile& profile, int t, int m);

/// Whether j' - 1 >= 2(k - j + 1) and 2 <= j <= l.
[[nodiscard]] bool g_prime_admissible(int j, int jprime, int k, int l);

/// A = V(j'-1, k-j+1, l-j), B = V(j'-1, k-j, l-j+1), joined at product -2l+2j-1.
/// Throws PreconditionError unless g_prime_admissible(j, jprime, k, l).
[[nodiscard]] BipartiteGraph build_G_prime(int j, int jprime, int k, int l);

struct BiregularReport {
    bool biregular = false;
    std::size_t deg_a = 0;
    std::size_t deg_b = 0;
    bool handshake = false; ///< deg_a |A| == deg_b |B|
    /// First vertex whose degree differs from its side's first vertex: ('A'|'B', index, degree).
    std::optional<std::tuple<char, std::size_t, std::size_t>> irregular;
    [[nodiscard]] bool ok() const noexcept { return biregular && handshake; }
    [[nodiscard]] std::string to_string() const;
};

[[nodiscard]] BiregularReport check_biregular(const BipartiteGraph& g);

struct BipartiteSubset {
    std::vector<std::size_t> a; ///< indices into side A
    std::vector<std::size_t> b; ///< indices into side B
};

[[nodiscard]] bool is_independent(const BipartiteGraph& g, const BipartiteSubset& s);

/// Evaluates |I∩B| + alpha|I∩A| <= alpha|A| exactly. Throws PreconditionError if
/// I is not independent, alpha < |B|/|A|, or A is empty.
[[nodiscard]] bool lemma3_check(const BipartiteGraph& g, const BipartiteSubset& independent, const ExactRational& alpha);

/// Biregular graph built from random perfect matchings between the degree-replicated sides;
/// samples with a repeated edge are redrawn. Throws InputError when a_size*deg_a != b_size*deg_b
/// or a degree exceeds the opposite side, and DegenerateInstance after too many redraws.
[[nodiscard]] BipartiteGraph random_biregular(std::size_t a_size, std::size_t b_size, std::size_t deg_a,
                                              std::size_t deg_b, std::uint64_t seed);

/// Greedy maximal independent set over a random vertex order.
[[nodiscard]] BipartiteSubset random_independent_set(const BipartiteGraph& g, std::uint64_t seed);

} // namespace signvec
