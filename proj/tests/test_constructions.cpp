#include "oracles.hpp"

#include "signvec/constructions.hpp"
#include "signvec/errors.hpp"
#include "signvec/formulas.hpp"
#include "signvec/solver.hpp"

#include <doctest.h>

#include <map>

using namespace signvec;

namespace {

SignedVector V(const char* text) { return parse_vector(text); }

int min_pair_product(const VectorFamily& fam) {
    int best = 1 << 20;
    for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = a + 1; b < fam.size(); ++b)
            best = std::min(best, oracle::dot(fam[a].values(), fam[b].values()));
    return best;
}

std::vector<Profile> g_profiles(int n_max) {
    std::vector<Profile> out;
    for (int n = 3; n <= n_max; ++n)
        for (int k = 2; k <= n; ++k)
            for (int l = 1; l < k && k + l <= n; ++l) out.push_back({n, k, l});
    return out;
}

} // namespace

TEST_CASE("EKR family") {
    const auto fam = ekr_family({4, 2, 1});
    CHECK(fam.size() == 6);
    for (const auto& v : fam) CHECK(v[1] == 1);
    for (const auto& p : g_profiles(8)) {
        const auto f = ekr_family(p);
        CHECK(BigCount(f.size()) == g_ekr_value(p.n, p.k, p.l).value);
        CHECK(BigCount(f.size()) == BigCount(oracle::choose(p.n - 1, p.k + p.l - 1) * oracle::choose(p.k + p.l - 1, p.l)));
        if (f.size() > 1) CHECK(min_pair_product(f) > -2 * p.l);
    }
}

TEST_CASE("inductive extension") {
    const auto fam = inductive_extend(ekr_family({4, 2, 1}));
    CHECK(fam.profile().n == 5);
    CHECK(fam.size() == 12);
    CHECK(fam.size() == 6 + oracle::choose(4, 2) * oracle::choose(2, 0));
    for (const auto& p : g_profiles(7)) {
        const auto ext = inductive_extend(ekr_family(p));
        if (ext.size() > 1) CHECK(min_pair_product(ext) > -2 * p.l);
        const auto twice = inductive_extend(ext);
        if (twice.size() > 1) CHECK(min_pair_product(twice) > -2 * p.l);
    }
}

TEST_CASE("inductive extension of the empty family is the minus-ended group") {
    for (int k = 2; k <= 4; ++k)
        for (int l = 1; l < k; ++l)
            for (int n = k + l; n <= 30; ++n) {
                if (oracle::choose(n, k + l - 1) * oracle::choose(k + l - 1, l - 1) > 200000) continue;
                const auto ext = inductive_extend(VectorFamily(Profile{n, k, l}));
                CHECK(ext.size() == oracle::choose(n, k + l - 1) * oracle::choose(k + l - 1, l - 1));
                CHECK(BigCount(ext.size()) == increment_value(n, k, l).value);
                for (const auto& v : ext) CHECK(v[n + 1] == -1);
            }
}

TEST_CASE("inductive extension refuses a family with a pair at -2l") {
    const VectorFamily bad(Profile{4, 2, 1}, {V("++-0"), V("-0++")});
    CHECK_THROWS_AS((void)inductive_extend(bad), PreconditionError);
}

TEST_CASE("split family") {
    IndexSet x;
    for (int i : {1, 2, 3}) x.insert(i);
    const auto fam = split_family({4, 2, 1}, x);
    CHECK(fam.size() == 3);
    for (const auto& p : g_profiles(8)) {
        std::size_t best = 0;
        for (int s = p.k; s <= p.n - p.l; ++s) {
            const auto f = split_family_prefix(p, s);
            best = std::max(best, f.size());
            if (f.size() > 1) CHECK(min_pair_product(f) >= 0);
        }
        CHECK(BigCount(best) == p_split(p.n, p.k, p.l).value);
    }
    CHECK_THROWS_AS((void)split_family_prefix({4, 2, 1}, 1), DomainError);
    CHECK_THROWS_AS((void)split_family_prefix({4, 2, 1}, 4), DomainError);
}

TEST_CASE("partition by last coordinate") {
    const auto a = partition_by_last(enumerate_all({2, 1, 1}));
    CHECK(a.minus.size() == 1);
    CHECK(a.zero.size() == 0);
    CHECK(a.plus.size() == 1);
    const auto b = partition_by_last(enumerate_all({3, 1, 1}));
    CHECK(b.minus.size() == 2);
    CHECK(b.zero.size() == 2);
    CHECK(b.plus.size() == 2);
    for (const auto& p : g_profiles(6)) {
        const auto fam = ekr_family(p);
        const auto parts = partition_by_last(fam);
        CHECK(parts.minus.size() + parts.zero.size() + parts.plus.size() == fam.size());
    }
}

TEST_CASE("X and Y classes") {
    const Profile p{7, 3, 1};
    for (int t = 1; t <= 3; ++t) {
        std::set<SignedVector> seen;
        std::size_t total = 0;
        for (int m = 0; m <= 1; ++m) {
            const auto x = family_XY_tm(p, t, m, XYSide::X);
            total += x.size();
            seen.insert(x.begin(), x.end());
            CHECK(BigCount(x.size()) == count_X_tm(6, 3, 1, t, m));
            CHECK(BigCount(family_XY_tm(p, t, m, XYSide::Y).size()) == count_Y_tm(6, 3, 1, t, m));
        }
        CHECK(seen.size() == total);
    }
    CHECK_THROWS_AS((void)family_XY_tm(p, 4, 0, XYSide::X), DomainError);
    CHECK_THROWS_AS((void)family_XY_tm({5, 3, 1}, 3, 0, XYSide::X), DomainError);
}

TEST_CASE("classification examples") {
    const auto a = classify_vector(V("+-0-+"));
    CHECK(a.kind == LabelKind::B1);
    CHECK(a.t == 1);
    CHECK(a.m == 0);
    const auto b = classify_vector(V("++--+"));
    CHECK(b.kind == LabelKind::B1);
    CHECK(b.t == 1);
    CHECK(b.m == 0);
    REQUIRE(b.markers);
    CHECK(b.markers->i_prime == 3);
    CHECK(b.markers->i_count == 2);
    const auto c = classify_vector(V("0+--+"));
    CHECK(c.kind == LabelKind::B2);
    CHECK(c.j == 2);
    CHECK(c.jprime == 3);
    CHECK(c.kind_text() == "B2");
    const auto d = classify_vector(V("0+0-+"));
    CHECK(d.kind == LabelKind::Unclassified);
    CHECK(d.kind_text() == "Unclassified");
}

TEST_CASE("plus-class members of optimal shifted families are B1 or B2, n <= 7") {
    for (const auto& p : g_profiles(7)) {
        const auto r = solve_extremal(p, Target::G);
        REQUIRE(r.status == SolveStatus::Exact);
        const auto plus = partition_by_last(r.witness).plus;
        std::map<std::pair<int, int>, std::set<SignedVector>> b2;
        for (const auto& v : plus) {
            const auto label = classify_vector(v);
            CHECK(label.kind != LabelKind::Unclassified);
            if (label.kind == LabelKind::B1) {
                CHECK(in_b1_class(v, label.t, label.m));
                if (2 * label.t - 1 < p.n) CHECK(family_XY_tm(p, label.t, label.m, XYSide::Y).contains(v));
            }
            if (label.kind == LabelKind::B2) {
                CHECK(label.j >= 1);
                CHECK(v.pos().count_prefix(label.jprime - 1) == p.k - label.j + 1);
                b2[{label.j, label.jprime}].insert(v);
                const auto key = group_key(v, label.jprime);
                CHECK(key.tail.dim() == p.n - label.jprime + 1);
                CHECK(key.negated_tail == negate(key.tail));
            }
        }
        std::size_t total = 0;
        std::set<SignedVector> all;
        for (const auto& [jj, members] : b2) {
            total += members.size();
            all.insert(members.begin(), members.end());
        }
        CHECK(all.size() == total);
    }
}

TEST_CASE("B1 classes are the plus class cut by Y") {
    for (const auto& p : g_profiles(7)) {
        const auto plus = partition_by_last(solve_extremal(p, Target::G).witness).plus;
        for (int t = 1; t <= p.k && 2 * t - 1 < p.n; ++t)
            for (int m = 0; m <= p.l; ++m) {
                const auto y = family_XY_tm(p, t, m, XYSide::Y);
                for (const auto& v : plus) CHECK(in_b1_class(v, t, m) == y.contains(v));
            }
    }
}
