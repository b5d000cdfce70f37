#include "signvec/mis_search.hpp"

#include "signvec/errors.hpp"

#include <algorithm>
#include <random>

namespace signvec {

void SimpleGraph::add_edge(std::size_t a, std::size_t b) {
    if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
    if (a >= size() || b >= size()) throw InputError("edge endpoint out of range");
    adj_[a].set(b);
    adj_[b].set(a);
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

bool SimpleGraph::is_independent(const std::vector<std::size_t>& vertices) const {
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (has_edge(vertices[a], vertices[b])) return false;
    return true;
}

SimpleGraph SimpleGraph::random(std::size_t n, double edge_probability, std::uint64_t seed) {
    SimpleGraph g(n);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_probability);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}

namespace {

using Clock = std::chrono::steady_clock;

struct BruteForce {
    std::vector<std::uint64_t> adj;
    std::uint64_t best_mask = 0;
    int best_size = 0;
    std::uint64_t nodes = 0;

    void rec(std::size_t v, std::uint64_t chosen, int size) {
        ++nodes;
        if (v == adj.size()) {
            if (size > best_size) {
                best_size = size;
                best_mask = chosen;
            }
            return;
        }
        if ((adj[v] & chosen) == 0) rec(v + 1, chosen | (std::uint64_t{1} << v), size + 1);
        rec(v + 1, chosen, size);
    }
};

class BranchAndBound {
public:
    BranchAndBound(const SimpleGraph& g, std::chrono::duration<double> budget)
        : g_(g), deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)) {}

    MisResult run() {
        const auto start = Clock::now();
        best_ = greedy_incumbent();
        Bits all(g_.size());
        all.set();
        expand(all);
        MisResult r;
        r.vertices = best_;
        std::sort(r.vertices.begin(), r.vertices.end());
        r.status = timed_out_ ? SolveStatus::LowerBoundTimeout : SolveStatus::Exact;
        r.nodes = nodes_;
        r.elapsed = Clock::now() - start;
        return r;
    }

private:
    std::vector<std::size_t> greedy_incumbent() const {
        Bits p(g_.size());
        p.set();
        std::vector<std::size_t> out;
        while (p.any()) {
            std::size_t pick = Bits::npos, low = Bits::npos;
            for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
                const auto d = (g_.neighbours(v) & p).count();
                if (d < low) {
                    low = d;
                    pick = v;
                }
            }
            out.push_back(pick);
            p -= g_.neighbours(pick);
            p.reset(pick);
        }
        return out;
    }

    void take(std::size_t v, Bits& p) {
        current_.push_back(v);
        p -= g_.neighbours(v);
        p.reset(v);
    }

    void expand(Bits p) {
        ++nodes_;
        if ((nodes_ & 1023) == 0 && Clock::now() > deadline_) timed_out_ = true;
        if (timed_out_) return;
        const auto depth = current_.size();

        // A vertex with at most one remaining neighbour belongs to some maximum independent set.
        for (bool changed = true; changed;) {
            changed = false;
            for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
                if ((g_.neighbours(v) & p).count() <= 1) {
                    take(v, p);
                    changed = true;
                }
            }
        }

        if (p.none()) {
            if (current_.size() > best_.size()) best_ = current_;
        } else if (current_.size() + greedy_clique_cover(g_, p) > best_.size()) {
            std::size_t branch = Bits::npos, top = 0;
            for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
                const auto d = (g_.neighbours(v) & p).count();
                if (branch == Bits::npos || d > top) {
                    top = d;
                    branch = v;
                }
            }
            Bits with = p;
            take(branch, with);
            expand(std::move(with));
            current_.pop_back();
            p.reset(branch);
            expand(std::move(p));
        }
        current_.resize(depth);
    }

    const SimpleGraph& g_;
    Clock::time_point deadline_;
    std::vector<std::size_t> current_, best_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

} // namespace

MisResult mis_bruteforce(const SimpleGraph& g) {
    if (g.size() > kBruteForceMaxVertices)
        throw SizeGuardError("mis_bruteforce is limited to " + std::to_string(kBruteForceMaxVertices) +
                             " vertices, got " + std::to_string(g.size()));
    const auto start = Clock::now();
    BruteForce bf;
    bf.adj.resize(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        for (std::size_t u = 0; u < g.size(); ++u)
            if (g.has_edge(v, u)) bf.adj[v] |= std::uint64_t{1} << u;
    bf.rec(0, 0, 0);
    MisResult r;
    for (std::size_t v = 0; v < g.size(); ++v)
        if ((bf.best_mask >> v) & 1) r.vertices.push_back(v);
    r.nodes = bf.nodes;
    r.elapsed = Clock::now() - start;
    return r;
}

MisResult mis_branch_and_bound(const SimpleGraph& g, std::chrono::duration<double> budget) {
    return BranchAndBound(g, budget).run();
}

std::size_t greedy_clique_cover(const SimpleGraph& g, Bits candidates) {
    std::size_t cliques = 0;
    while (candidates.any()) {
        const auto v = candidates.find_first();
        candidates.reset(v);
        Bits extend = candidates & g.neighbours(v);
        while (extend.any()) {
            const auto u = extend.find_first();
            candidates.reset(u);
            extend &= g.neighbours(u);
        }
        ++cliques;
    }
    return cliques;
}

} // namespace signvec
