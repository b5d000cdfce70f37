#include "signvec/bipartite.hpp"

#include "signvec/constructions.hpp"
#include "signvec/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

namespace signvec {

BipartiteGraph::BipartiteGraph(std::size_t a_size, std::size_t b_size) : a_adj_(a_size), b_adj_(b_size) {}

BipartiteGraph::BipartiteGraph(VectorFamily a, VectorFamily b)
    : a_adj_(a.size()), b_adj_(b.size()), a_family_(std::move(a)), b_family_(std::move(b)) {}

bool BipartiteGraph::has_edge(std::size_t a, std::size_t b) const {
    const auto& row = a_adj_.at(a);
    return std::binary_search(row.begin(), row.end(), b);
}

void BipartiteGraph::add_edge(std::size_t a, std::size_t b) {
    if (a >= a_size() || b >= b_size()) throw InputError("bipartite edge endpoint out of range");
    auto& row = a_adj_[a];
    auto it = std::lower_bound(row.begin(), row.end(), b);
    if (it != row.end() && *it == b) return;
    row.insert(it, b);
    auto& col = b_adj_[b];
    col.insert(std::lower_bound(col.begin(), col.end(), a), a);
    ++edges_;
}

std::vector<std::pair<std::size_t, std::size_t>> BipartiteGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges_);
    for (std::size_t a = 0; a < a_size(); ++a)
        for (auto b : a_adj_[a]) out.emplace_back(a, b);
    return out;
}

namespace {

BipartiteGraph join_at_product(VectorFamily a, VectorFamily b, int product) {
    BipartiteGraph g(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (scalar_product(a[i], b[j]) == product) g.add_edge(i, j);
    return g;
}

} // namespace

BipartiteGraph build_G_tm(const Profile& profile, int t, int m) {
    auto x = family_XY_tm(profile, t, m, XYSide::X);
    auto y = family_XY_tm(profile, t, m, XYSide::Y);
    if (x.empty() || y.empty())
        throw DegenerateInstance("G^{t,m} at " + profile.to_string() + ", t=" + std::to_string(t) +
                                 ", m=" + std::to_string(m) + " has an empty side");
    return join_at_product(std::move(x), std::move(y), -2 * profile.l);
}

bool g_prime_admissible(int j, int jprime, int k, int l) {
    return 2 <= j && j <= l && l < k && jprime - 1 >= 2 * (k - j + 1);
}

BipartiteGraph build_G_prime(int j, int jprime, int k, int l) {
    if (!g_prime_admissible(j, jprime, k, l))
        throw PreconditionError("G' needs 2 <= j <= l < k and j'-1 >= 2(k-j+1); got j=" + std::to_string(j) +
                                ", j'=" + std::to_string(jprime) + ", k=" + std::to_string(k) +
                                ", l=" + std::to_string(l));
    const int dim = jprime - 1;
    // l - j may be 0, so the A side can have no negative coordinates at all.
    return join_at_product(enumerate_all({dim, k - j + 1, l - j}), enumerate_all({dim, k - j, l - j + 1}),
                           -2 * l + 2 * j - 1);
}

std::string BiregularReport::to_string() const {
    if (ok()) return "biregular (" + std::to_string(deg_a) + "," + std::to_string(deg_b) + ")";
    if (irregular) {
        const auto& [side, idx, deg] = *irregular;
        return std::string("irregular vertex ") + side + std::to_string(idx) + " of degree " + std::to_string(deg);
    }
    return "handshake identity fails";
}

BiregularReport check_biregular(const BipartiteGraph& g) {
    BiregularReport r;
    r.biregular = true;
    if (g.a_size() > 0) r.deg_a = g.a_neighbours(0).size();
    if (g.b_size() > 0) r.deg_b = g.b_neighbours(0).size();
    for (std::size_t a = 0; a < g.a_size() && r.biregular; ++a)
        if (g.a_neighbours(a).size() != r.deg_a) {
            r.biregular = false;
            r.irregular = std::make_tuple('A', a, g.a_neighbours(a).size());
        }
    for (std::size_t b = 0; b < g.b_size() && r.biregular; ++b)
        if (g.b_neighbours(b).size() != r.deg_b) {
            r.biregular = false;
            r.irregular = std::make_tuple('B', b, g.b_neighbours(b).size());
        }
    r.handshake = r.deg_a * g.a_size() == r.deg_b * g.b_size() && r.deg_a * g.a_size() == g.edge_count();
    return r;
}

bool is_independent(const BipartiteGraph& g, const BipartiteSubset& s) {
    std::vector<bool> in_b(g.b_size(), false);
    for (auto b : s.b) {
        if (b >= g.b_size()) return false;
        in_b[b] = true;
    }
    for (auto a : s.a) {
        if (a >= g.a_size()) return false;
        for (auto b : g.a_neighbours(a))
            if (in_b[b]) return false;
    }
    return true;
}

bool lemma3_check(const BipartiteGraph& g, const BipartiteSubset& independent, const ExactRational& alpha) {
    if (g.a_size() == 0) throw PreconditionError("lemma3_check needs a nonempty side A");
    if (!is_independent(g, independent)) throw PreconditionError("lemma3_check: the set is not independent");
    const ExactRational ratio(g.b_size(), g.a_size());
    if (alpha < ratio)
        throw PreconditionError("lemma3_check: alpha " + to_text(alpha) + " is below |B|/|A| = " + to_text(ratio));
    auto distinct = [](std::vector<std::size_t> v) {
        std::sort(v.begin(), v.end());
        return static_cast<long>(std::unique(v.begin(), v.end()) - v.begin());
    };
    const ExactRational lhs = ExactRational(distinct(independent.b)) + alpha * distinct(independent.a);
    const ExactRational rhs = alpha * static_cast<long>(g.a_size());
    return lhs <= rhs;
}

BipartiteGraph random_biregular(std::size_t a_size, std::size_t b_size, std::size_t deg_a, std::size_t deg_b,
                                std::uint64_t seed) {
    if (a_size * deg_a != b_size * deg_b)
        throw InputError("degree sequence violates the handshake identity: " + std::to_string(a_size) + "*" +
                         std::to_string(deg_a) + " != " + std::to_string(b_size) + "*" + std::to_string(deg_b));
    if (deg_a > b_size || deg_b > a_size) throw InputError("degree larger than the opposite side");

    std::vector<std::size_t> a_stubs, b_stubs;
    for (std::size_t a = 0; a < a_size; ++a) a_stubs.insert(a_stubs.end(), deg_a, a);
    for (std::size_t b = 0; b < b_size; ++b) b_stubs.insert(b_stubs.end(), deg_b, b);

    std::mt19937_64 rng(seed);
    constexpr int kMaxRedraws = 20000;
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        std::shuffle(b_stubs.begin(), b_stubs.end(), rng);
        BipartiteGraph g(a_size, b_size);
        bool simple = true;
        for (std::size_t i = 0; i < a_stubs.size() && simple; ++i) {
            if (g.has_edge(a_stubs[i], b_stubs[i])) simple = false;
            else g.add_edge(a_stubs[i], b_stubs[i]);
        }
        if (simple) return g;
    }
    throw DegenerateInstance("random_biregular: no simple graph after " + std::to_string(kMaxRedraws) + " draws");
}

BipartiteSubset random_independent_set(const BipartiteGraph& g, std::uint64_t seed) {
    const std::size_t total = g.a_size() + g.b_size();
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<bool> blocked(total, false);
    BipartiteSubset s;
    for (auto v : order) {
        if (blocked[v]) continue;
        if (v < g.a_size()) {
            s.a.push_back(v);
            for (auto b : g.a_neighbours(v)) blocked[g.a_size() + b] = true;
        } else {
            const auto b = v - g.a_size();
            s.b.push_back(b);
            for (auto a : g.b_neighbours(b)) blocked[a] = true;
        }
    }
    std::sort(s.a.begin(), s.a.end());
    std::sort(s.b.begin(), s.b.end());
    return s;
}

} // namespace signvec
