#include "oracles.hpp"

#include "signvec/errors.hpp"
#include "signvec/signed_vector.hpp"

#include <doctest.h>

#include <sstream>

using namespace signvec;

namespace {

SignedVector V(const char* text) { return parse_vector(text); }

} // namespace

TEST_CASE("enumerate_all sizes") {
    CHECK(enumerate_all({3, 2, 1}).size() == 3);
    CHECK(enumerate_all({4, 2, 1}).size() == 12);
    CHECK(enumerate_all({6, 3, 2}).size() == 60);
}

TEST_CASE("enumerate_all matches counting through all sign patterns") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = 0; k + l <= n; ++l) {
                const auto fam = enumerate_all({n, k, l});
                const auto ref = oracle::all_vectors(n, k, l);
                REQUIRE(fam.size() == ref.size());
                for (const auto& v : ref) CHECK(fam.contains(SignedVector::from_values(v)));
            }
}

TEST_CASE("enumerate_all size is the multinomial coefficient up to n = 10") {
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = 0; k + l <= n; ++l)
                CHECK(enumerate_all({n, k, l}).size() == oracle::choose(n, k + l) * oracle::choose(k + l, k));
}

TEST_CASE("enumerate_all is canonically sorted without duplicates") {
    const auto fam = enumerate_all({6, 2, 2});
    for (std::size_t i = 1; i < fam.size(); ++i) CHECK(fam[i - 1] < fam[i]);
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(Profile({3, 2, 2}).validate(), InputError);
    CHECK_THROWS_AS(Profile({3, 0, 1}).validate(), InputError);
    CHECK_THROWS_AS(Profile({0, 1, 0}).validate(), InputError);
    CHECK_THROWS_AS(Profile({kMaxDim + 1, 1, 0}).validate(), InputError);
    CHECK_NOTHROW(Profile({3, 1, 1}).validate());
    CHECK_THROWS_AS(Profile({4, 1, 1}).validate_for_g(), InputError);
    CHECK_NOTHROW(Profile({4, 2, 1}).validate_for_g());
}

TEST_CASE("scalar product examples") {
    const auto v = V("+0-+");
    CHECK(scalar_product(v, v) == 3);
    CHECK(scalar_product(V("++-0"), V("-0++")) == -2);
    CHECK(scalar_product(V("+0-+"), V("+0-+")) == 3);
    CHECK_THROWS_AS((void)scalar_product(V("+-"), V("+-0")), InputError);
}

TEST_CASE("scalar product range and minimal pairs, exhaustive to n = 6") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = 0; l <= k && k + l <= n; ++l) {
                const auto fam = enumerate_all({n, k, l});
                for (const auto& v : fam)
                    for (const auto& w : fam) {
                        const int sp = scalar_product(v, w);
                        CHECK(sp == oracle::dot(v.values(), w.values()));
                        CHECK(sp >= -2 * l);
                        CHECK(sp <= k + l);
                        const bool minimal = (v.pos() & w.pos()).empty() && (v.neg() & w.neg()).empty() &&
                                             (v.neg() - w.pos()).empty() && (w.neg() - v.pos()).empty();
                        CHECK((sp == -2 * l) == minimal);
                    }
            }
}

TEST_CASE("negation flips or preserves products") {
    const auto fam = enumerate_all({5, 2, 2});
    for (const auto& v : fam)
        for (const auto& w : fam) {
            CHECK(scalar_product(negate(v), negate(w)) == scalar_product(v, w));
            CHECK(scalar_product(negate(v), w) == -scalar_product(v, w));
        }
}

TEST_CASE("supports, restriction and negation") {
    const auto v = V("+0-+");
    CHECK(support(v).to_vector() == std::vector<int>{1, 3, 4});
    CHECK(v.pos().to_vector() == std::vector<int>{1, 4});
    CHECK(v.neg().to_vector() == std::vector<int>{3});
    CHECK(format_vector(restrict_to(v, 3, 4)) == "-+");
    CHECK(format_vector(negate(v)) == "-0+-");
    CHECK_THROWS_AS((void)restrict_to(v, 3, 5), InputError);
    CHECK_THROWS_AS((void)restrict_to(v, 0, 2), InputError);
}

TEST_CASE("lambda examples") {
    CHECK(lambda(V("-+")) == 0);
    CHECK(lambda(V("+-")) == -1);
    CHECK(lambda(V("0+-+")) == 0);
}

TEST_CASE("lambda equals the minimum right-to-left suffix sum") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = 0; k + l <= n; ++l)
                for (const auto& v : enumerate_all({n, k, l})) CHECK(lambda(v) == oracle::min_suffix(v.values()));
}

TEST_CASE("suffix markers examples") {
    const auto a = suffix_markers(V("++--+"));
    REQUIRE(a);
    CHECK(a->i_prime == 3);
    CHECK(a->i_count == 2);
    CHECK_FALSE(suffix_markers(V("-+")));
    const auto b = suffix_markers(V("+-"));
    REQUIRE(b);
    CHECK(b->i_prime == 2);
    CHECK(b->i_count == 1);
}

TEST_CASE("suffix markers present exactly when some suffix sum is -1") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = 0; k + l <= n; ++l)
                for (const auto& v : enumerate_all({n, k, l})) {
                    const auto sums = oracle::suffix_sums(v.values());
                    int last_minus_one = 0;
                    for (int i = 1; i <= n; ++i)
                        if (sums[i - 1] == -1) last_minus_one = i;
                    const auto mk = suffix_markers(v);
                    CHECK(mk.has_value() == (last_minus_one > 0));
                    if (lambda(v) <= -1) CHECK(mk.has_value());
                    if (mk) {
                        CHECK(mk->i_prime == last_minus_one);
                        CHECK(mk->i_count == oracle::count_in(v.values(), last_minus_one, n, -1));
                    }
                }
}

TEST_CASE("parse and format") {
    const auto v = V("+0-");
    CHECK(v.dim() == 3);
    CHECK(v.pos().to_vector() == std::vector<int>{1});
    CHECK(v.neg().to_vector() == std::vector<int>{3});
    CHECK(format_vector(V("0+-+")) == "0+-+");
    CHECK(format_vector(parse_vector("0+−+")) == "0+-+");
    CHECK_THROWS_AS((void)parse_vector("+x-"), ParseError);
    CHECK_THROWS_AS((void)parse_vector(""), ParseError);
}

TEST_CASE("parse and format round trip on every vector up to n = 6") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = 0; k + l <= n; ++l)
                for (const auto& v : enumerate_all({n, k, l})) {
                    CHECK(parse_vector(format_vector(v)) == v);
                    CHECK(format_vector(v) == oracle::text_of(v.values()));
                }
}

TEST_CASE("signed vector construction guards") {
    IndexSet a, b;
    a.insert(1);
    b.insert(1);
    CHECK_THROWS_AS(SignedVector(3, a, b), InputError);
    IndexSet far;
    far.insert(5);
    CHECK_THROWS_AS(SignedVector(3, far, IndexSet{}), InputError);
    CHECK_THROWS_AS(SignedVector::from_values({1, 2}), InputError);
}

TEST_CASE("family file round trip") {
    const auto fam = enumerate_all({5, 2, 1});
    std::stringstream ss;
    write_family(ss, fam);
    const auto text = ss.str();
    CHECK(text.rfind("5 2 1\n", 0) == 0);
    std::stringstream in(text);
    CHECK(read_family(in) == fam);
}

TEST_CASE("family file errors") {
    std::stringstream wrong_len("4 2 1\n+-+\n");
    CHECK_THROWS_AS((void)read_family(wrong_len), InputError);
    std::stringstream bad_header("four 2 1\n");
    CHECK_THROWS_AS((void)read_family(bad_header), ParseError);
    std::stringstream bad_char("3 1 1\n+-x\n");
    CHECK_THROWS_AS((void)read_family(bad_char), ParseError);
    CHECK_THROWS_AS((void)read_family_file("/nonexistent/family.txt"), InputError);
}

TEST_CASE("family membership and index") {
    const auto fam = enumerate_all({4, 2, 1});
    for (std::size_t i = 0; i < fam.size(); ++i) CHECK(fam.index_of(fam[i]) == i);
    CHECK_FALSE(fam.index_of(V("++00")));
    CHECK_THROWS_AS(VectorFamily(Profile{4, 2, 1}, {V("++00")}), InputError);
    const VectorFamily dup(Profile{3, 1, 1}, {V("+-0"), V("+-0"), V("-+0")});
    CHECK(dup.size() == 2);
}
