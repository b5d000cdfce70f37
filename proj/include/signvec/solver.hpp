#pragma once

// Exact values of g(n,k,l) (no pair at product -2l) and m(n,k,l) (no negative
// product) as maximum independent sets of conflict graphs.

#include "signvec/conflict_graph.hpp"
#include "signvec/mis_search.hpp"

#include <chrono>
#include <string>

namespace signvec {

enum class Target { G, M };

[[nodiscard]] std::string to_string(Target t);
[[nodiscard]] std::string to_string(SolveStatus s);

struct SolveResult {
    std::size_t value = 0;
    VectorFamily witness;
    SolveStatus status = SolveStatus::Exact;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{};
};

inline constexpr std::chrono::seconds kDefaultBudget{60};

[[nodiscard]] SolveResult mis_bruteforce(const ConflictGraph& cg);
[[nodiscard]] SolveResult mis_exact(const ConflictGraph& cg, std::chrono::duration<double> budget = kDefaultBudget);

/// Maximum independent set restricted to shifted (≺-downward closed) families.
///
/// Vertices are visited in a linear extension of ≺. Excluding a vector kills
/// every vector above it; including one kills its conflicts and everything
/// above them. A live vector with no live conflict is taken without branching.
/// Requires cg.vertices to be a complete V(n,k,l).
[[nodiscard]] SolveResult mis_shifted(const ConflictGraph& cg, std::chrono::duration<double> budget = kDefaultBudget);

struct SolveOptions {
    std::chrono::duration<double> budget = kDefaultBudget;
    bool shifted_pruning = true;
    std::size_t vertex_cap = kDefaultVertexCap;
};

/// target G: ExactValues{-2l}; target M: AllBelow(0). Throws PreconditionError
/// when shifted pruning is requested for M.
[[nodiscard]] SolveResult solve_extremal(const Profile& profile, Target target, const SolveOptions& options = {});

} // namespace signvec
