#include "signvec/shifting.hpp"

#include "signvec/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace signvec {

SignedVector shift(const SignedVector& v, ShiftMove mv) {
    if (mv.i < 1 || mv.i >= mv.j || mv.j > v.dim())
        throw InputError("shift (" + std::to_string(mv.i) + "<-" + std::to_string(mv.j) + ") invalid for dimension " +
                         std::to_string(v.dim()));
    const int a = v[mv.i];
    const int b = v[mv.j];
    if (a >= b) return v;
    IndexSet pos = v.pos(), neg = v.neg();
    auto put = [&](int idx, int val) {
        pos.erase(idx);
        neg.erase(idx);
        if (val == 1) pos.insert(idx);
        if (val == -1) neg.insert(idx);
    };
    put(mv.i, b);
    put(mv.j, a);
    return {v.dim(), pos, neg};
}

bool precedes(const SignedVector& v, const SignedVector& w) {
    if (v.dim() != w.dim())
        throw InputError("precedes: dimensions " + std::to_string(v.dim()) + " and " + std::to_string(w.dim()));
    if (v.plus_count() != w.plus_count() || v.minus_count() != w.minus_count()) return false;
    int v_plus = 0, w_plus = 0, v_nonneg = 0, w_nonneg = 0;
    for (int p = 1; p <= v.dim(); ++p) {
        v_plus += v[p] >= 1;
        w_plus += w[p] >= 1;
        v_nonneg += v[p] >= 0;
        w_nonneg += w[p] >= 0;
        if (v_plus < w_plus || v_nonneg < w_nonneg) return false;
    }
    return true;
}

std::vector<SignedVector> single_shift_images(const SignedVector& v) {
    std::vector<SignedVector> out;
    for (int i = 1; i <= v.dim(); ++i)
        for (int j = i + 1; j <= v.dim(); ++j)
            if (v[i] < v[j]) out.push_back(shift(v, {i, j}));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool precedes_oracle(const SignedVector& v, const SignedVector& w) {
    if (v.dim() != w.dim())
        throw InputError("precedes_oracle: dimensions " + std::to_string(v.dim()) + " and " +
                         std::to_string(w.dim()));
    if (w.dim() > kPrecedesOracleMaxDim)
        throw SizeGuardError("precedes_oracle is limited to dimension " + std::to_string(kPrecedesOracleMaxDim));
    std::unordered_set<SignedVector, SignedVectorHash> seen{w};
    std::deque<SignedVector> frontier{w};
    while (!frontier.empty()) {
        const auto cur = frontier.front();
        frontier.pop_front();
        if (cur == v) return true;
        for (int i = 1; i <= cur.dim(); ++i)
            for (int j = i + 1; j <= cur.dim(); ++j) {
                auto next = shift(cur, {i, j});
                if (seen.insert(next).second) frontier.push_back(next);
            }
    }
    return false;
}

bool is_shifted(const VectorFamily& family) {
    for (const auto& w : family)
        for (const auto& img : single_shift_images(w))
            if (!family.contains(img)) return false;
    return true;
}

VectorFamily compress(const VectorFamily& family) {
    std::set<SignedVector> current(family.begin(), family.end());
    const int n = family.profile().n;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= n && !changed; ++i) {
            for (int j = i + 1; j <= n && !changed; ++j) {
                const std::vector<SignedVector> snapshot(current.begin(), current.end());
                for (const auto& w : snapshot) {
                    auto img = shift(w, {i, j});
                    if (img != w && !current.contains(img)) {
                        current.erase(w);
                        current.insert(img);
                        changed = true;
                    }
                }
            }
        }
    }
    return VectorFamily(family.profile(), {current.begin(), current.end()});
}

long shift_potential(const SignedVector& v) {
    long total = 0;
    for (int i = 1; i <= v.dim(); ++i) total += static_cast<long>(i) * (v[i] + 1);
    return total;
}

} // namespace signvec
