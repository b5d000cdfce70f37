#include "oracles.hpp"

#include "signvec/bipartite.hpp"
#include "signvec/errors.hpp"
#include "signvec/formulas.hpp"

#include <doctest.h>

using namespace signvec;

namespace {

BipartiteGraph complete(std::size_t a, std::size_t b) {
    BipartiteGraph g(a, b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) g.add_edge(i, j);
    return g;
}

BipartiteSubset all_of_a(const BipartiteGraph& g) {
    BipartiteSubset s;
    for (std::size_t i = 0; i < g.a_size(); ++i) s.a.push_back(i);
    return s;
}

} // namespace

TEST_CASE("adjacency bookkeeping") {
    BipartiteGraph g(3, 2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(2, 0);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(1, 1));
    CHECK(g.b_neighbours(1) == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(g.add_edge(3, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 2), InputError);
}

TEST_CASE("random biregular examples") {
    const auto g = random_biregular(6, 4, 2, 3, 5);
    const auto r = check_biregular(g);
    CHECK(r.ok());
    CHECK(r.deg_a == 2);
    CHECK(r.deg_b == 3);
    CHECK(g.edge_count() == 12);
    CHECK_THROWS_AS((void)random_biregular(5, 4, 2, 3, 5), InputError);
    CHECK_THROWS_AS((void)random_biregular(2, 4, 5, 3, 5), InputError);
}

TEST_CASE("a planted extra edge breaks biregularity") {
    auto g = random_biregular(6, 4, 2, 3, 9);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            if (!g.has_edge(a, b)) {
                g.add_edge(a, b);
                const auto r = check_biregular(g);
                CHECK_FALSE(r.ok());
                CHECK(r.irregular.has_value());
                return;
            }
    FAIL("graph was complete");
}

TEST_CASE("averaging inequality on small graphs") {
    const auto g = complete(3, 6);
    CHECK(lemma3_check(g, all_of_a(g), ExactRational(2)));
    CHECK(lemma3_check(g, BipartiteSubset{}, ExactRational(2)));
    BipartiteSubset b_side;
    for (std::size_t j = 0; j < 6; ++j) b_side.b.push_back(j);
    CHECK(lemma3_check(g, b_side, ExactRational(2)));
    CHECK_THROWS_AS((void)lemma3_check(g, b_side, ExactRational(1)), PreconditionError);
    BipartiteSubset both{{0}, {0}};
    CHECK_FALSE(is_independent(g, both));
    CHECK_THROWS_AS((void)lemma3_check(g, both, ExactRational(2)), PreconditionError);
    CHECK_THROWS_AS((void)lemma3_check(BipartiteGraph(0, 3), BipartiteSubset{}, ExactRational(5)), PreconditionError);
}

TEST_CASE("averaging inequality on random biregular graphs") {
    std::uint64_t seed = 1;
    for (std::size_t da = 1; da <= 4; ++da)
        for (std::size_t db = 1; db <= 4; ++db)
            for (std::size_t a = db; a <= 24; a += db) {
                if ((a * da) % db != 0) continue;
                const std::size_t b = a * da / db;
                if (da > b || db > a) continue;
                const auto g = random_biregular(a, b, da, db, seed++);
                REQUIRE(check_biregular(g).ok());
                const ExactRational ratio(static_cast<long>(b), static_cast<long>(a));
                for (int trial = 0; trial < 5; ++trial) {
                    const auto s = random_independent_set(g, seed++);
                    CHECK(is_independent(g, s));
                    CHECK(lemma3_check(g, s, ratio));
                    CHECK(lemma3_check(g, s, ratio + ExactRational(1, 3)));
                    // The inequality recomputed here with plain integers: |I∩B| a <= b (a - |I∩A|).
                    CHECK(s.b.size() * a <= b * (a - s.a.size()));
                }
            }
}

TEST_CASE("G^{t,m} graphs are biregular with edges at product -2l") {
    for (int dim = 4; dim <= 8; ++dim)
        for (int k = 2; k < dim; ++k)
            for (int l = 1; l < k && k + l <= dim; ++l)
                for (int t = 1; t <= k && 2 * t - 1 < dim; ++t)
                    for (int m = 0; m <= l; ++m) {
                        const Profile p{dim, k, l};
                        if (count_X_tm(dim - 1, k, l, t, m) == 0 || count_Y_tm(dim - 1, k, l, t, m) == 0) {
                            CHECK_THROWS_AS((void)build_G_tm(p, t, m), DegenerateInstance);
                            continue;
                        }
                        const auto g = build_G_tm(p, t, m);
                        const auto r = check_biregular(g);
                        CHECK(r.ok());
                        const auto& A = *g.a_family();
                        const auto& B = *g.b_family();
                        for (std::size_t i = 0; i < A.size(); ++i)
                            for (std::size_t j = 0; j < B.size(); ++j)
                                CHECK(g.has_edge(i, j) == (oracle::dot(A[i].values(), B[j].values()) == -2 * l));
                        const bool room = 2 * k - 1 - t - m <= (dim - 1) - 2 * t + 1;
                        CHECK((g.edge_count() > 0) == room);
                        if (g.edge_count() > 0)
                            CHECK(ExactRational(static_cast<long>(r.deg_a), static_cast<long>(r.deg_b)) ==
                                  ratio_and_alpha(dim - 1, k, l, t, m).ratio);
                    }
}

TEST_CASE("G^{t,m} example with edges") {
    const auto g = build_G_tm({7, 2, 1}, 1, 0);
    CHECK(g.edge_count() > 0);
    CHECK(check_biregular(g).ok());
}

TEST_CASE("G' graphs") {
    CHECK_FALSE(g_prime_admissible(2, 4, 3, 2));
    CHECK(g_prime_admissible(2, 5, 3, 2));
    CHECK_FALSE(g_prime_admissible(1, 9, 3, 2));
    CHECK_THROWS_AS((void)build_G_prime(2, 4, 3, 2), PreconditionError);
    for (int k = 3; k <= 5; ++k)
        for (int l = 2; l < k; ++l)
            for (int j = 2; j <= l; ++j)
                for (int jp = 2 * (k - j + 1) + 1; jp <= 9; ++jp) {
                    const auto g = build_G_prime(j, jp, k, l);
                    const auto r = check_biregular(g);
                    CHECK(r.ok());
                    CHECK(r.deg_a > 0);
                    CHECK(ExactRational(static_cast<long>(r.deg_a), static_cast<long>(r.deg_b)) ==
                          ExactRational(k - j + 1, l - j + 1));
                    const auto& A = *g.a_family();
                    const auto& B = *g.b_family();
                    for (std::size_t i = 0; i < A.size(); ++i)
                        for (std::size_t b = 0; b < B.size(); ++b)
                            CHECK(g.has_edge(i, b) ==
                                  (oracle::dot(A[i].values(), B[b].values()) == -2 * l + 2 * j - 1));
                }
}
