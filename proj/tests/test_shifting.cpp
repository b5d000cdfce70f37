#include "oracles.hpp"

#include "signvec/errors.hpp"
#include "signvec/shifting.hpp"

#include <doctest.h>

#include <random>

using namespace signvec;

namespace {

SignedVector V(const char* text) { return parse_vector(text); }

VectorFamily F(Profile p, std::initializer_list<const char*> members) {
    std::vector<SignedVector> out;
    for (auto m : members) out.push_back(parse_vector(m));
    return VectorFamily(p, std::move(out));
}

std::vector<SignedVector> all_of_dim(int n) {
    std::vector<SignedVector> out;
    for (int k = 1; k <= n; ++k)
        for (int l = 0; k + l <= n; ++l)
            for (const auto& v : enumerate_all({n, k, l})) out.push_back(v);
    return out;
}

int min_pair_product(const VectorFamily& fam) {
    int best = 1 << 20;
    for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = a + 1; b < fam.size(); ++b) best = std::min(best, scalar_product(fam[a], fam[b]));
    return best;
}

} // namespace

TEST_CASE("shift examples") {
    CHECK(format_vector(shift(V("-+"), {1, 2})) == "+-");
    CHECK(format_vector(shift(V("+-"), {1, 2})) == "+-");
    CHECK(format_vector(shift(V("0+-+"), {1, 2})) == "+0-+");
    CHECK_THROWS_AS((void)shift(V("0+-+"), {2, 2}), InputError);
    CHECK_THROWS_AS((void)shift(V("0+-+"), {3, 5}), InputError);
}

TEST_CASE("shift agrees with the value-array shift") {
    for (const auto& v : all_of_dim(5))
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j)
                CHECK(shift(v, {i, j}).values() == oracle::shift(v.values(), i, j));
}

TEST_CASE("precedes examples") {
    CHECK(precedes(V("+0"), V("0+")));
    CHECK_FALSE(precedes(V("0+"), V("+0")));
    CHECK(precedes(V("+0+-"), V("0+-+")));
    CHECK(precedes_oracle(V("+0"), V("0+")));
    CHECK_FALSE(precedes_oracle(V("0+"), V("+0")));
    CHECK(precedes_oracle(V("+0+-"), V("0+-+")));
    CHECK(precedes_oracle(V("0+-+"), V("0+-+")));
    CHECK(precedes_oracle(V("+-"), V("-+")));
    CHECK_THROWS_AS((void)precedes_oracle(V("+00000000"), V("00000000+")), SizeGuardError);
}

TEST_CASE("shift images precede their source, n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& v : all_of_dim(n))
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    const auto s = shift(v, {i, j});
                    CHECK(precedes(s, v));
                    if (s != v) CHECK(shift_potential(s) < shift_potential(v));
                }
}

TEST_CASE("precedes equals breadth-first reachability, exhaustive n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const auto all = all_of_dim(n);
        for (const auto& v : all)
            for (const auto& w : all) {
                if (v.plus_count() != w.plus_count() || v.minus_count() != w.minus_count()) {
                    CHECK_FALSE(precedes(v, w));
                    continue;
                }
                const bool expected = oracle::reachable_by_shifts(v.values(), w.values());
                CHECK(precedes(v, w) == expected);
                CHECK(precedes_oracle(v, w) == expected);
            }
    }
}

TEST_CASE("precedes equals the library oracle on random pairs at n = 6, 7") {
    std::mt19937_64 rng(7);
    for (int n : {6, 7})
        for (int trial = 0; trial < 2000; ++trial) {
            const int k = std::uniform_int_distribution<int>(1, n)(rng);
            const int l = std::uniform_int_distribution<int>(0, n - k)(rng);
            const auto fam = enumerate_all({n, k, l});
            std::uniform_int_distribution<std::size_t> pick(0, fam.size() - 1);
            const auto& v = fam[pick(rng)];
            const auto& w = fam[pick(rng)];
            CHECK(precedes(v, w) == oracle::reachable_by_shifts(v.values(), w.values()));
        }
}

TEST_CASE("precedes is a partial order, n <= 5") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = 0; k + l <= n; ++l) {
                const auto fam = enumerate_all({n, k, l});
                for (const auto& a : fam) {
                    CHECK(precedes(a, a));
                    for (const auto& b : fam) {
                        if (a != b && precedes(a, b)) CHECK_FALSE(precedes(b, a));
                        for (const auto& c : fam)
                            if (precedes(a, b) && precedes(b, c)) CHECK(precedes(a, c));
                    }
                }
            }
    // Transitivity at n = 5 on the largest profile.
    const auto fam = enumerate_all({5, 2, 2});
    for (const auto& a : fam)
        for (const auto& b : fam)
            if (precedes(a, b))
                for (const auto& c : fam)
                    if (precedes(b, c)) CHECK(precedes(a, c));
}

TEST_CASE("comparable vectors share their coordinate multiset") {
    const auto all = all_of_dim(5);
    for (const auto& v : all)
        for (const auto& w : all)
            if (precedes(v, w)) {
                auto a = v.values(), b = w.values();
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                CHECK(a == b);
            }
}

TEST_CASE("is_shifted examples") {
    const auto fam = F({3, 1, 1}, {"+0-", "+-0"});
    bool closed = true;
    for (const auto& v : fam)
        for (const auto& img : single_shift_images(v)) closed = closed && fam.contains(img);
    CHECK(is_shifted(fam) == closed);
    CHECK(is_shifted(fam));
    CHECK_FALSE(is_shifted(F({2, 1, 0}, {"0+"})));
    CHECK(is_shifted(enumerate_all({5, 2, 1})));
}

TEST_CASE("compress examples") {
    CHECK(compress(F({2, 1, 0}, {"0+"})) == F({2, 1, 0}, {"+0"}));
    const auto full = enumerate_all({4, 2, 1});
    CHECK(compress(full) == full);
    const auto out = compress(F({4, 2, 1}, {"0+-+", "+-0+"}));
    CHECK(out.size() == 2);
    CHECK(is_shifted(out));
}

TEST_CASE("compress keeps size, shifts, and keeps products above -2l, n <= 7") {
    std::mt19937_64 rng(11);
    for (int n = 3; n <= 7; ++n)
        for (int k = 2; k <= n; ++k)
            for (int l = 1; l < k && k + l <= n; ++l) {
                const auto all = enumerate_all({n, k, l});
                for (int trial = 0; trial < 6; ++trial) {
                    // Greedy random family avoiding -2l.
                    std::vector<std::size_t> order(all.size());
                    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
                    std::shuffle(order.begin(), order.end(), rng);
                    std::vector<SignedVector> chosen;
                    for (auto i : order) {
                        bool ok = true;
                        for (const auto& c : chosen) ok = ok && scalar_product(c, all[i]) != -2 * l;
                        if (ok) chosen.push_back(all[i]);
                        if (chosen.size() >= 12) break;
                    }
                    const VectorFamily fam(Profile{n, k, l}, chosen);
                    const auto out = compress(fam);
                    CHECK(out.size() == fam.size());
                    CHECK(is_shifted(out));
                    if (fam.size() > 1) CHECK(min_pair_product(out) > -2 * l);
                }
            }
}

TEST_CASE("sorting by potential is a linear extension") {
    const auto fam = enumerate_all({6, 3, 2});
    for (const auto& v : fam)
        for (const auto& w : fam)
            if (v != w && precedes(v, w)) CHECK(shift_potential(v) < shift_potential(w));
}
