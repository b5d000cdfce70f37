#include "signvec/constructions.hpp"

#include "signvec/conflict_graph.hpp"
#include "signvec/errors.hpp"

#include <algorithm>

namespace signvec {

VectorFamily ekr_family(const Profile& profile) {
    profile.validate();
    std::vector<SignedVector> out;
    for (const auto& v : enumerate_all(profile))
        if (v[1] == 1) out.push_back(v);
    return VectorFamily(profile, std::move(out));
}

VectorFamily inductive_extend(const VectorFamily& family) {
    const auto& p = family.profile();
    if (const auto hit = find_minimum_product_pair(family))
        throw PreconditionError("inductive_extend: input contains " + format_vector(family[hit->first]) + " and " +
                                format_vector(family[hit->second]) + " at product " + std::to_string(-2 * p.l));
    const Profile next{p.n + 1, p.k, p.l};
    next.validate();
    std::vector<SignedVector> out;
    out.reserve(family.size());
    for (const auto& v : family) out.emplace_back(next.n, v.pos(), v.neg());
    for (const auto& v : enumerate_all(next))
        if (v[next.n] == -1) out.push_back(v);
    return VectorFamily(next, std::move(out));
}

VectorFamily split_family(const Profile& profile, const IndexSet& x) {
    profile.validate();
    const auto all = IndexSet::range(profile.n);
    if (!(x - all).empty()) throw DomainError("split_family: X leaves [1..n]");
    const auto y = all - x;
    if (x.size() < profile.k || y.size() < profile.l)
        throw DomainError("split_family: need |X| >= k and |Y| >= l, got |X|=" + std::to_string(x.size()));
    std::vector<SignedVector> out;
    for (const auto& v : enumerate_all(profile))
        if ((v.pos() - x).empty() && (v.neg() - y).empty()) out.push_back(v);
    return VectorFamily(profile, std::move(out));
}

VectorFamily split_family_prefix(const Profile& profile, int x) {
    if (x < 0 || x > profile.n) throw DomainError("split_family_prefix: |X| out of range");
    return split_family(profile, IndexSet::range(x));
}

LastCoordinateParts partition_by_last(const VectorFamily& family) {
    const auto& p = family.profile();
    std::vector<SignedVector> minus, zero, plus;
    for (const auto& v : family) {
        switch (v[p.n]) {
        case -1: minus.push_back(v); break;
        case 0: zero.push_back(v); break;
        default: plus.push_back(v); break;
        }
    }
    return {VectorFamily(p, std::move(minus)), VectorFamily(p, std::move(zero)), VectorFamily(p, std::move(plus))};
}

VectorFamily family_XY_tm(const Profile& profile, int t, int m, XYSide side) {
    profile.validate();
    if (t < 1 || t > profile.k || m < 0 || 2 * t - 1 >= profile.n)
        throw DomainError("family_XY_tm: need 1 <= t <= k, m >= 0 and 2t-1 < n+1");
    const int w = 2 * t - 1;
    const int d = std::max(t - (profile.k - profile.l), 0);
    std::vector<SignedVector> out;
    for (const auto& v : enumerate_all(profile)) {
        const int plus_in = v.pos().count_prefix(w);
        const int minus_in = v.neg().count_prefix(w);
        const bool keep = side == XYSide::Y ? (v[profile.n] == 1 && plus_in == t && minus_in == m)
                                            : (v[profile.n] == -1 && plus_in == m && minus_in == d);
        if (keep) out.push_back(v);
    }
    return VectorFamily(profile, std::move(out));
}

std::string ClassificationLabel::kind_text() const {
    switch (kind) {
    case LabelKind::B1: return "B1";
    case LabelKind::B2: return "B2";
    default: return "Unclassified";
    }
}

bool in_b1_class(const SignedVector& v, int t, int m) {
    const int w = 2 * t - 1;
    if (t < 1 || w > v.dim()) return false;
    return v.pos().count_prefix(w) == t && v.neg().count_prefix(w) == m;
}

ClassificationLabel classify_vector(const SignedVector& v) {
    ClassificationLabel label;
    const int n = v.dim();
    const int k = v.plus_count();
    const int l = v.minus_count();
    label.last = n == 0 ? LastClass::Zero : (v[n] == 1 ? LastClass::Plus : (v[n] == -1 ? LastClass::Minus : LastClass::Zero));
    label.markers = suffix_markers(v);

    for (int t = 1; 2 * t - 1 <= n; ++t) {
        const int w = 2 * t - 1;
        if (v.pos().count_prefix(w) != t) continue;
        const int m = v.neg().count_prefix(w);
        if (label.kind == LabelKind::Unclassified) {
            label.kind = LabelKind::B1;
            label.t = t;
            label.m = m;
        }
        if (t <= k - l || m == 0) label.in_b1_prime = true;
    }
    if (label.kind == LabelKind::B1) return label;

    if (lambda(v) <= -1 && label.markers) {
        label.kind = LabelKind::B2;
        label.j = label.markers->i_count;
        label.jprime = label.markers->i_prime;
        label.condition_12 = label.jprime - 1 >= 2 * (k - label.j + 1);
    }
    return label;
}

GroupKey group_key(const SignedVector& v, int jprime) {
    auto tail = restrict_to(v, jprime, v.dim());
    return {tail, negate(tail)};
}

} // namespace signvec
