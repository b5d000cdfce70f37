#pragma once

// Explicit construction of a vector v ≺ w with <v,w> = -2l for a vector w that
// is not interlaced (lambda(w) >= 0) and has no positive prefix majority
// (|S+(w) ∩ [2t-1]| <= t-1 for every t).
//
// The construction runs in two passes of shifts:
//   1. every -1 of w, scanning right to left, is swapped with the smallest
//      still unused +1 to its right, giving u;
//   2. the first k-l zeros J of w are swapped with the untouched +1's J' of
//      w (those with w = u = +1), pairing them in increasing order.
// All intermediate objects are kept in a WitnessTrace so the ordering claims
// the construction depends on can be re-checked independently.

#include "signvec/signed_vector.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace signvec {

struct WitnessConditions {
    bool not_interlaced = false;    ///< lambda(w) >= 0
    bool no_prefix_majority = false; ///< |S+(w) ∩ [1..2t-1]| <= t-1 for all t with 2t-1 <= dim
    [[nodiscard]] bool both() const noexcept { return not_interlaced && no_prefix_majority; }
};

[[nodiscard]] WitnessConditions check_conditions(const SignedVector& w);

struct WitnessTrace {
    std::vector<int> q;      ///< indices of -1's of w, decreasing
    std::vector<int> p;      ///< indices of +1's of w, decreasing
    std::vector<int> r;      ///< the first k indices with w != +1, increasing
    std::vector<std::pair<int, int>> pairing; ///< (q_i, partner) in processing order
    std::vector<int> partner_rank;            ///< s(i): 1-based rank of the partner in p
    SignedVector u;
    std::vector<int> J;      ///< first k-l zero positions of w, increasing
    std::vector<int> Jprime; ///< positions with w = u = +1, increasing
    SignedVector v;
};

struct Witness {
    SignedVector v;
    WitnessTrace trace;
};

/// Throws PreconditionError unless check_conditions(w).both() and k >= l.
[[nodiscard]] Witness construct_witness(const SignedVector& w);

struct ClaimCheck {
    std::string name;
    bool passed = true;
    std::optional<int> violating_index; ///< 1-based position in the relevant sequence
    std::string detail;
};

struct TraceReport {
    std::vector<ClaimCheck> claims;
    [[nodiscard]] bool all_passed() const noexcept;
    [[nodiscard]] const ClaimCheck* find(const std::string& name) const noexcept;
};

/// Re-checks every property the construction relies on against w:
/// "sizes", "pairing", "claim1", "claim2", "zero_sum", "replay", "product".
[[nodiscard]] TraceReport verify_trace_claims(const WitnessTrace& trace, const SignedVector& w);

} // namespace signvec
