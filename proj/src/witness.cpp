#include "signvec/witness.hpp"

#include "signvec/errors.hpp"
#include "signvec/shifting.hpp"

#include <algorithm>
#include <set>

namespace signvec {

WitnessConditions check_conditions(const SignedVector& w) {
    WitnessConditions c;
    c.not_interlaced = lambda(w) >= 0;
    c.no_prefix_majority = true;
    for (int t = 1; 2 * t - 1 <= w.dim(); ++t) {
        if (w.pos().count_prefix(2 * t - 1) > t - 1) {
            c.no_prefix_majority = false;
            break;
        }
    }
    return c;
}

Witness construct_witness(const SignedVector& w) {
    const int k = w.plus_count();
    const int l = w.minus_count();
    if (k < l) throw PreconditionError("construct_witness needs k >= l, got " + format_vector(w));
    const auto cond = check_conditions(w);
    if (!cond.both())
        throw PreconditionError("construct_witness: " + format_vector(w) +
                                (cond.not_interlaced ? " has a positive prefix majority" : " is interlaced"));

    WitnessTrace tr;
    for (int i = w.dim(); i >= 1; --i) {
        if (w[i] == -1) tr.q.push_back(i);
        if (w[i] == 1) tr.p.push_back(i);
    }
    for (int i = 1; i <= w.dim() && static_cast<int>(tr.r.size()) < k; ++i)
        if (w[i] != 1) tr.r.push_back(i);

    // Pass 1: pair each -1 (right to left) with the smallest unused +1 to its right.
    std::vector<bool> used(tr.p.size(), false);
    SignedVector u = w;
    for (std::size_t i = 0; i < tr.q.size(); ++i) {
        const int qi = tr.q[i];
        // p_1..p_{i+1} all exceed q_{i+1} and only i partners are taken so far,
        // so an unused one among them always exists.
        bool among_first = false;
        for (std::size_t s = 0; s <= i && s < tr.p.size(); ++s) among_first |= !used[s] && tr.p[s] > qi;
        if (!among_first)
            throw PreconditionError("no unused +1 among the first " + std::to_string(i + 1) +
                                    " to the right of position " + std::to_string(qi));
        std::optional<std::size_t> pick;
        for (std::size_t s = tr.p.size(); s-- > 0;) { // p is decreasing: scan from the smallest
            if (!used[s] && tr.p[s] > qi) {
                pick = s;
                break;
            }
        }
        used[*pick] = true;
        tr.pairing.emplace_back(qi, tr.p[*pick]);
        tr.partner_rank.push_back(static_cast<int>(*pick) + 1);
        u = shift(u, {qi, tr.p[*pick]});
    }
    tr.u = u;

    for (int i = 1; i <= w.dim() && static_cast<int>(tr.J.size()) < k - l; ++i)
        if (w[i] == 0) tr.J.push_back(i);
    for (int i = 1; i <= w.dim(); ++i)
        if (w[i] == 1 && u[i] == 1) tr.Jprime.push_back(i);
    if (tr.J.size() != tr.Jprime.size())
        throw PreconditionError("zero positions and untouched +1's differ in number for " + format_vector(w));

    // Pass 2: move each untouched +1 left onto the matching zero.
    SignedVector v = u;
    for (std::size_t i = 0; i < tr.J.size(); ++i) {
        if (tr.J[i] >= tr.Jprime[i])
            throw PreconditionError("zero position " + std::to_string(tr.J[i]) + " is not left of +1 at " +
                                    std::to_string(tr.Jprime[i]));
        v = shift(v, {tr.J[i], tr.Jprime[i]});
    }
    tr.v = v;
    return {v, std::move(tr)};
}

bool TraceReport::all_passed() const noexcept {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimCheck& c) { return c.passed; });
}

const ClaimCheck* TraceReport::find(const std::string& name) const noexcept {
    for (const auto& c : claims)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

ClaimCheck fail(std::string name, std::optional<int> idx, std::string detail) {
    return {std::move(name), false, idx, std::move(detail)};
}

bool strictly_monotone(const std::vector<int>& xs, bool increasing) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (increasing ? xs[i - 1] >= xs[i] : xs[i - 1] <= xs[i]) return false;
    return true;
}

} // namespace

TraceReport verify_trace_claims(const WitnessTrace& tr, const SignedVector& w) {
    const int k = w.plus_count();
    const int l = w.minus_count();
    TraceReport report;

    {
        ClaimCheck c{"sizes", true, std::nullopt, ""};
        if (static_cast<int>(tr.q.size()) != l) c = fail("sizes", std::nullopt, "|q| != l");
        else if (static_cast<int>(tr.p.size()) != k) c = fail("sizes", std::nullopt, "|p| != k");
        else if (static_cast<int>(tr.J.size()) != k - l) c = fail("sizes", std::nullopt, "|J| != k-l");
        else if (static_cast<int>(tr.Jprime.size()) != k - l) c = fail("sizes", std::nullopt, "|J'| != k-l");
        else if (!strictly_monotone(tr.q, false) || !strictly_monotone(tr.p, false))
            c = fail("sizes", std::nullopt, "q or p not decreasing");
        else if (!strictly_monotone(tr.J, true) || !strictly_monotone(tr.Jprime, true))
            c = fail("sizes", std::nullopt, "J or J' not increasing");
        report.claims.push_back(c);
    }

    {
        ClaimCheck c{"pairing", true, std::nullopt, ""};
        std::set<int> partners;
        if (tr.pairing.size() != tr.q.size()) c = fail("pairing", std::nullopt, "pairing does not cover q");
        for (std::size_t i = 0; c.passed && i < tr.pairing.size(); ++i) {
            const auto [qi, pi] = tr.pairing[i];
            const int idx = static_cast<int>(i) + 1;
            if (qi != tr.q[i] || w[qi] != -1) c = fail("pairing", idx, "pair does not start at q_i");
            else if (w[pi] != 1) c = fail("pairing", idx, "partner is not a +1 of w");
            else if (pi <= qi) c = fail("pairing", idx, "partner not to the right of q_i");
            else if (!partners.insert(pi).second) c = fail("pairing", idx, "partner used twice");
        }
        report.claims.push_back(c);
    }

    {
        ClaimCheck c{"claim1", true, std::nullopt, ""};
        for (int i = 1; c.passed && i <= l && i <= static_cast<int>(tr.q.size()) &&
                        i <= static_cast<int>(tr.p.size());
             ++i)
            if (!(tr.q[i - 1] < tr.p[i - 1])) c = fail("claim1", i, "q_i >= p_i");
        if (c.passed && static_cast<int>(tr.r.size()) < k) c = fail("claim1", std::nullopt, "fewer than k non-+1 indices");
        for (int i = 1; c.passed && i <= k && static_cast<int>(tr.p.size()) >= k; ++i)
            if (!(tr.p[k - i] > tr.r[i - 1])) c = fail("claim1", i, "p_{k-i+1} <= r_i");
        report.claims.push_back(c);
    }

    {
        ClaimCheck c{"claim2", true, std::nullopt, ""};
        const auto m = std::min(tr.J.size(), tr.Jprime.size());
        for (std::size_t i = 0; c.passed && i < m; ++i)
            if (!(tr.J[i] < tr.Jprime[i])) c = fail("claim2", static_cast<int>(i) + 1, "j_i >= j'_i");
        report.claims.push_back(c);
    }

    {
        // The +1/-1 coordinates of [1..j'_i] outside J ∪ J' pair off, so they sum to zero.
        ClaimCheck c{"zero_sum", true, std::nullopt, ""};
        std::set<int> excluded(tr.J.begin(), tr.J.end());
        excluded.insert(tr.Jprime.begin(), tr.Jprime.end());
        for (std::size_t i = 0; c.passed && i < tr.Jprime.size(); ++i) {
            int sum = 0;
            for (int s = 1; s <= tr.Jprime[i] && s <= w.dim(); ++s)
                if (!excluded.contains(s)) sum += w[s];
            if (sum != 0)
                c = fail("zero_sum", static_cast<int>(i) + 1, "window sum " + std::to_string(sum));
        }
        report.claims.push_back(c);
    }

    {
        ClaimCheck c{"replay", true, std::nullopt, ""};
        try {
            SignedVector u = w;
            for (const auto& [qi, pi] : tr.pairing) u = shift(u, {qi, pi});
            if (u != tr.u) c = fail("replay", std::nullopt, "u differs from replayed first pass");
            SignedVector v = tr.u;
            for (std::size_t i = 0; c.passed && i < std::min(tr.J.size(), tr.Jprime.size()); ++i)
                v = shift(v, {std::min(tr.J[i], tr.Jprime[i]), std::max(tr.J[i], tr.Jprime[i])});
            if (c.passed && v != tr.v) c = fail("replay", std::nullopt, "v differs from replayed second pass");
            if (c.passed && !precedes(tr.v, w)) c = fail("replay", std::nullopt, "v does not precede w");
        } catch (const InputError& e) {
            c = fail("replay", std::nullopt, e.what());
        }
        report.claims.push_back(c);
    }

    {
        ClaimCheck c{"product", true, std::nullopt, ""};
        if (tr.v.dim() != w.dim() || !tr.v.fits({w.dim(), k, l}))
            c = fail("product", std::nullopt, "v leaves the profile of w");
        else if (const int sp = scalar_product(tr.v, w); sp != -2 * l)
            c = fail("product", std::nullopt, "<v,w> = " + std::to_string(sp));
        report.claims.push_back(c);
    }
    return report;
}

} // namespace signvec
