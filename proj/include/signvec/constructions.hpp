#pragma once

// Explicit extremal families and the classification of plus-ended vectors
// used when comparing the last-coordinate classes of a family.

#include "signvec/signed_vector.hpp"

#include <optional>
#include <string>

namespace signvec {

/// All vectors of the profile with +1 in coordinate 1.
[[nodiscard]] VectorFamily ekr_family(const Profile& profile);

/// Appends a 0 coordinate to every member and adds every vector of V(n+1,k,l) ending in -1.
/// Throws PreconditionError if the input already contains a pair at product -2l.
[[nodiscard]] VectorFamily inductive_extend(const VectorFamily& family);

/// V(X, [n] \ X): positives confined to X, negatives to the complement.
/// Throws DomainError unless |X| >= k and n - |X| >= l.
[[nodiscard]] VectorFamily split_family(const Profile& profile, const IndexSet& x);
/// split_family with X = {1..x}.
[[nodiscard]] VectorFamily split_family_prefix(const Profile& profile, int x);

struct LastCoordinateParts {
    VectorFamily minus; ///< last coordinate -1
    VectorFamily zero;
    VectorFamily plus;
};

[[nodiscard]] LastCoordinateParts partition_by_last(const VectorFamily& family);

enum class XYSide { X, Y };

/// Y side: last coordinate +1, t pluses and m minuses in [1..2t-1].
/// X side: last coordinate -1, m pluses and max(t-(k-l),0) minuses in [1..2t-1].
/// The profile is over dimension n+1 = profile.n. Throws DomainError unless 1 <= t <= k, m >= 0, 2t-1 < profile.n.
[[nodiscard]] VectorFamily family_XY_tm(const Profile& profile, int t, int m, XYSide side);

enum class LabelKind { B1, B2, Unclassified };
enum class LastClass { Minus, Zero, Plus };

struct ClassificationLabel {
    LabelKind kind = LabelKind::Unclassified;
    int t = 0;      ///< B1: smallest t with |S+ ∩ [2t-1]| = t
    int m = 0;      ///< B1: |S- ∩ [2t-1]|
    int j = 0;      ///< B2: i(v), negatives in [i'(v)..dim]
    int jprime = 0; ///< B2: i'(v), largest index with suffix sum -1
    LastClass last = LastClass::Zero;
    std::optional<SuffixMarkers> markers; ///< reported whenever present, whatever the kind
    bool in_b1_prime = false;             ///< covered by B1 classes with t <= k-l, or t > k-l and m = 0
    bool condition_12 = false;            ///< B2 only: j' - 1 >= 2(k - j + 1)

    [[nodiscard]] std::string kind_text() const;
};

/// Membership test for the B1^{t,m} class: |S+ ∩ [2t-1]| = t and |S- ∩ [2t-1]| = m.
[[nodiscard]] bool in_b1_class(const SignedVector& v, int t, int m);

/// Classifies any vector; the B1/B2 dichotomy is only guaranteed for plus-ended
/// members of shifted families avoiding product -2l.
[[nodiscard]] ClassificationLabel classify_vector(const SignedVector& v);

struct GroupKey {
    SignedVector tail;         ///< v restricted to [j'..dim]
    SignedVector negated_tail; ///< the tail that a matching minus-class vector carries
    friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

/// Grouping key used to pair B2^{j,j'} members with minus-class vectors sharing the negated tail.
[[nodiscard]] GroupKey group_key(const SignedVector& v, int jprime);

} // namespace signvec
