#include "signvec/conflict_graph.hpp"

#include "signvec/errors.hpp"
#include "signvec/formulas.hpp"

#include <algorithm>
#include <unordered_map>

namespace signvec {

ForbiddenSpec ForbiddenSpec::exact_values(std::set<int> values) {
    if (values.empty()) throw InputError("ExactValues forbidden set must be nonempty");
    ForbiddenSpec s;
    s.values_ = std::move(values);
    return s;
}

ForbiddenSpec ForbiddenSpec::all_below(int threshold) {
    ForbiddenSpec s;
    s.threshold_ = threshold;
    return s;
}

void ForbiddenSpec::validate_for(const Profile& p) const {
    for (int v : values_)
        if (v < -2 * std::min(p.k, p.l) || v > p.k + p.l)
            throw InputError("forbidden product " + std::to_string(v) + " outside the attainable range for " +
                             p.to_string());
}

std::string ForbiddenSpec::to_string() const {
    if (threshold_) return "AllBelow(" + std::to_string(*threshold_) + ")";
    std::string s = "ExactValues{";
    bool first = true;
    for (int v : values_) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

ConflictGraph build_conflict_graph(const VectorFamily& family, const ForbiddenSpec& spec) {
    spec.validate_for(family.profile());
    ConflictGraph cg{family, SimpleGraph(family.size()), spec};
    for (std::size_t a = 0; a < family.size(); ++a) {
        if (spec.forbids(scalar_product(family[a], family[a])))
            throw InputError("spec " + spec.to_string() + " forbids the self-product of " + format_vector(family[a]));
        for (std::size_t b = a + 1; b < family.size(); ++b)
            if (spec.forbids(scalar_product(family[a], family[b]))) cg.graph.add_edge(a, b);
    }
    return cg;
}

ConflictGraph build_conflict_graph(const Profile& profile, const ForbiddenSpec& spec, std::size_t vertex_cap) {
    profile.validate();
    const BigCount size = family_size(profile.n, profile.k, profile.l);
    if (size > vertex_cap)
        throw SizeGuardError("V" + profile.to_string() + " has " + to_text(size) + " vectors, above the cap of " +
                             std::to_string(vertex_cap));
    return build_conflict_graph(enumerate_all(profile), spec);
}

std::string FamilyCheck::to_string() const {
    if (passed) return "pass";
    return "fail: <" + format_vector(violating_pair->first) + "," + format_vector(violating_pair->second) +
           "> = " + std::to_string(product);
}

std::optional<std::pair<std::size_t, std::size_t>> find_minimum_product_pair(const VectorFamily& family) {
    const int l = family.profile().l;
    std::unordered_map<IndexSet, std::vector<std::size_t>, IndexSetHash> by_negatives;
    for (std::size_t i = 0; i < family.size(); ++i) by_negatives[family[i].neg()].push_back(i);

    for (std::size_t a = 0; a < family.size(); ++a) {
        const auto pos = family[a].pos().to_vector();
        if (static_cast<int>(pos.size()) < l) continue;
        std::optional<std::size_t> best;
        // Walk the l-subsets of S+(a) in lexicographic order of positions.
        std::vector<int> pick(l);
        for (int i = 0; i < l; ++i) pick[i] = i;
        for (;;) {
            IndexSet key;
            for (int i : pick) key.insert(pos[i]);
            if (auto it = by_negatives.find(key); it != by_negatives.end()) {
                const auto& list = it->second;
                for (auto b = std::upper_bound(list.begin(), list.end(), a); b != list.end(); ++b) {
                    if (best && *b >= *best) break;
                    if (scalar_product(family[a], family[*b]) == -2 * l) {
                        best = *b;
                        break;
                    }
                }
            }
            int i = l - 1;
            while (i >= 0 && pick[i] == static_cast<int>(pos.size()) - l + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < l; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (best) return std::make_pair(a, *best);
    }
    return std::nullopt;
}

FamilyCheck verify_family(const VectorFamily& family, const ForbiddenSpec& spec) {
    const int l = family.profile().l;
    // Self products are k + l > 0, so only proper pairs can sit at -2l.
    if (spec == ForbiddenSpec::for_g(family.profile()) && family.profile().k + l > 0) {
        if (auto hit = find_minimum_product_pair(family))
            return {false, std::make_pair(family[hit->first], family[hit->second]), -2 * l};
        return {};
    }
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a; b < family.size(); ++b) {
            const int sp = scalar_product(family[a], family[b]);
            if (spec.forbids(sp)) return {false, std::make_pair(family[a], family[b]), sp};
        }
    return {};
}

} // namespace signvec
