#include "signvec/solver.hpp"

#include "signvec/errors.hpp"
#include "signvec/formulas.hpp"
#include "signvec/shifting.hpp"

#include <algorithm>
#include <numeric>

namespace signvec {

std::string to_string(Target t) { return t == Target::G ? "g" : "m"; }

std::string to_string(SolveStatus s) { return s == SolveStatus::Exact ? "exact" : "lower_bound"; }

namespace {

using Clock = std::chrono::steady_clock;

SolveResult to_solve_result(const ConflictGraph& cg, const MisResult& r) {
    std::vector<SignedVector> chosen;
    chosen.reserve(r.vertices.size());
    for (auto v : r.vertices) chosen.push_back(cg.vertices[v]);
    SolveResult out;
    out.value = chosen.size();
    out.witness = VectorFamily(cg.vertices.profile(), std::move(chosen));
    out.status = r.status;
    out.nodes_explored = r.nodes;
    out.elapsed = r.elapsed;
    return out;
}

// Search over down-sets of ≺ that are independent in the conflict graph.
// Vertex ids are positions in a linear extension, so "not yet decided" is a suffix.
class ShiftedSearch {
public:
    ShiftedSearch(const ConflictGraph& cg, std::chrono::duration<double> budget)
        : cg_(cg), deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)) {
        const auto& fam = cg.vertices;
        const std::size_t n = fam.size();
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::vector<long> potential(n);
        for (std::size_t i = 0; i < n; ++i) potential[i] = shift_potential(fam[i]);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return potential[a] < potential[b]; });
        std::vector<std::size_t> rank(n);
        for (std::size_t r = 0; r < n; ++r) rank[order_[r]] = r;

        graph_ = SimpleGraph(n);
        for (std::size_t a = 0; a < n; ++a)
            for (auto b = cg.graph.neighbours(a).find_next(a); b != Bits::npos; b = cg.graph.neighbours(a).find_next(b))
                graph_.add_edge(rank[a], rank[b]);

        // up_[r]: r together with every vector it precedes.
        std::vector<std::vector<std::size_t>> upper(n);
        for (std::size_t a = 0; a < n; ++a)
            for (const auto& img : single_shift_images(fam[a])) {
                const auto idx = fam.index_of(img);
                if (!idx) throw PreconditionError("shifted search needs a complete V(n,k,l) vertex set");
                upper[rank[*idx]].push_back(rank[a]);
            }
        up_.assign(n, Bits(n));
        for (std::size_t r = n; r-- > 0;) {
            up_[r].set(r);
            for (auto c : upper[r]) up_[r] |= up_[c];
        }
        kill_.assign(n, Bits(n));
        for (std::size_t r = 0; r < n; ++r)
            for (auto u = graph_.neighbours(r).find_first(); u != Bits::npos; u = graph_.neighbours(r).find_next(u))
                kill_[r] |= up_[u];
    }

    SolveResult run() {
        const auto start = Clock::now();
        const std::size_t n = order_.size();
        Bits live(n);
        live.set();
        expand(std::move(live));
        MisResult r;
        for (auto v : best_) r.vertices.push_back(order_[v]);
        std::sort(r.vertices.begin(), r.vertices.end());
        r.status = timed_out_ ? SolveStatus::LowerBoundTimeout : SolveStatus::Exact;
        r.nodes = nodes_;
        r.elapsed = Clock::now() - start;
        return to_solve_result(cg_, r);
    }

private:
    // live: undecided vectors that can still be added.
    void expand(Bits live) {
        ++nodes_;
        if ((nodes_ & 1023) == 0 && Clock::now() > deadline_) timed_out_ = true;
        if (timed_out_) return;
        const auto depth = current_.size();

        for (;;) {
            const auto v = live.find_first();
            if (v == Bits::npos) {
                if (current_.size() > best_.size()) best_ = current_;
                break;
            }
            if (!(graph_.neighbours(v) & live).any()) {
                current_.push_back(v);
                live.reset(v);
                continue;
            }
            if (current_.size() + greedy_clique_cover(graph_, live) <= best_.size()) break;

            Bits with = live;
            with -= kill_[v];
            with.reset(v);
            current_.push_back(v);
            expand(std::move(with));
            current_.pop_back();
            if (timed_out_) break;

            live -= up_[v];
        }
        current_.resize(depth);
    }

    const ConflictGraph& cg_;
    Clock::time_point deadline_;
    std::vector<std::size_t> order_;
    SimpleGraph graph_;
    std::vector<Bits> up_, kill_;
    std::vector<std::size_t> current_, best_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

} // namespace

SolveResult mis_bruteforce(const ConflictGraph& cg) { return to_solve_result(cg, mis_bruteforce(cg.graph)); }

SolveResult mis_exact(const ConflictGraph& cg, std::chrono::duration<double> budget) {
    return to_solve_result(cg, mis_branch_and_bound(cg.graph, budget));
}

SolveResult mis_shifted(const ConflictGraph& cg, std::chrono::duration<double> budget) {
    return ShiftedSearch(cg, budget).run();
}

SolveResult solve_extremal(const Profile& profile, Target target, const SolveOptions& options) {
    if (target == Target::G) profile.validate_for_g();
    else profile.validate();
    if (options.shifted_pruning && target == Target::M)
        throw PreconditionError("shifted pruning is only justified for g(n,k,l)");
    const auto spec = target == Target::G ? ForbiddenSpec::for_g(profile) : ForbiddenSpec::for_m();
    const auto cg = build_conflict_graph(profile, spec, options.vertex_cap);
    return options.shifted_pruning ? mis_shifted(cg, options.budget) : mis_exact(cg, options.budget);
}

} // namespace signvec
