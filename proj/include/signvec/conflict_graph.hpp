#pragma once

#include "signvec/mis_search.hpp"
#include "signvec/signed_vector.hpp"

#include <optional>
#include <set>
#include <string>

namespace signvec {

/// Which scalar products are forbidden between two members of a family.
class ForbiddenSpec {
public:
    /// Products equal to one of `values` are forbidden. Throws InputError if empty.
    static ForbiddenSpec exact_values(std::set<int> values);
    /// Products strictly below `threshold` are forbidden.
    static ForbiddenSpec all_below(int threshold);

    /// ExactValues{-2l}: the g(n,k,l) constraint.
    static ForbiddenSpec for_g(const Profile& p) { return exact_values({-2 * p.l}); }
    /// AllBelow(0): the m(n,k,l) constraint.
    static ForbiddenSpec for_m() { return all_below(0); }

    [[nodiscard]] bool forbids(int product) const noexcept {
        return threshold_ ? product < *threshold_ : values_.contains(product);
    }
    /// Throws InputError if an exact value lies outside [-2l, k+l].
    void validate_for(const Profile& p) const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ForbiddenSpec&, const ForbiddenSpec&) = default;

private:
    std::set<int> values_;
    std::optional<int> threshold_;
};

/// Vectors as vertices, an edge wherever the scalar product is forbidden.
struct ConflictGraph {
    VectorFamily vertices;
    SimpleGraph graph;
    ForbiddenSpec spec = ForbiddenSpec::all_below(0);
};

inline constexpr std::size_t kDefaultVertexCap = 5000;

/// Builds the conflict graph on all of V(n,k,l). Throws SizeGuardError when |V(n,k,l)| exceeds `vertex_cap`.
[[nodiscard]] ConflictGraph build_conflict_graph(const Profile& profile, const ForbiddenSpec& spec,
                                                 std::size_t vertex_cap = kDefaultVertexCap);

/// Conflict graph restricted to the members of an arbitrary family.
[[nodiscard]] ConflictGraph build_conflict_graph(const VectorFamily& family, const ForbiddenSpec& spec);

struct FamilyCheck {
    bool passed = true;
    std::optional<std::pair<SignedVector, SignedVector>> violating_pair;
    int product = 0;
    [[nodiscard]] std::string to_string() const;
};

/// Scans all pairs (a vector with itself included) and reports the first forbidden product.
/// For the g constraint the scan only visits pairs that can reach -2l.
[[nodiscard]] FamilyCheck verify_family(const VectorFamily& family, const ForbiddenSpec& spec);

/// First pair (a < b, in the order verify_family scans) with product -2l.
/// Such a pair has S-(b) inside S+(a), so only members whose negative support is an
/// l-subset of S+(a) are compared with a.
[[nodiscard]] std::optional<std::pair<std::size_t, std::size_t>> find_minimum_product_pair(const VectorFamily& family);

} // namespace signvec
