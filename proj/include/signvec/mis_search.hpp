#pragma once

// Maximum independent set on small dense-bitset graphs: an exhaustive oracle
// and a branch-and-bound search with clique-cover bounds.

#include <boost/dynamic_bitset.hpp>

#include <chrono>
#include <cstdint>
#include <vector>

namespace signvec {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
class SimpleGraph {
public:
    explicit SimpleGraph(std::size_t n = 0) : adj_(n, Bits(n)) {}

    [[nodiscard]] std::size_t size() const noexcept { return adj_.size(); }
    /// Self-loops are rejected with InputError.
    void add_edge(std::size_t a, std::size_t b);
    [[nodiscard]] bool has_edge(std::size_t a, std::size_t b) const { return adj_[a][b]; }
    [[nodiscard]] const Bits& neighbours(std::size_t v) const { return adj_[v]; }
    [[nodiscard]] std::size_t degree(std::size_t v) const { return adj_[v].count(); }
    [[nodiscard]] std::size_t edge_count() const;
    [[nodiscard]] bool is_independent(const std::vector<std::size_t>& vertices) const;

    /// G(n, p) with a seeded engine.
    static SimpleGraph random(std::size_t n, double edge_probability, std::uint64_t seed);

private:
    std::vector<Bits> adj_;
};

enum class SolveStatus { Exact, LowerBoundTimeout };

struct MisResult {
    std::vector<std::size_t> vertices; ///< increasing
    SolveStatus status = SolveStatus::Exact;
    std::uint64_t nodes = 0;
    std::chrono::duration<double> elapsed{};
};

inline constexpr std::size_t kBruteForceMaxVertices = 25;

/// Enumerates every independent set. Refuses graphs above kBruteForceMaxVertices.
[[nodiscard]] MisResult mis_bruteforce(const SimpleGraph& g);

/// Branch and bound: degree <= 1 reductions, a greedy clique cover as upper
/// bound at every node, and branching on a vertex of maximum remaining degree
/// (lowest index on ties). Returns LowerBoundTimeout with the incumbent when the
/// budget runs out.
[[nodiscard]] MisResult mis_branch_and_bound(const SimpleGraph& g, std::chrono::duration<double> budget);

/// Number of cliques in a greedy clique cover of the vertices in `candidates`;
/// an upper bound on any independent subset of them.
[[nodiscard]] std::size_t greedy_clique_cover(const SimpleGraph& g, Bits candidates);

} // namespace signvec
