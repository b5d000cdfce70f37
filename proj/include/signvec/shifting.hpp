#pragma once

// (i <- j)-shifts and the shifting partial order.
//
// The shift (i <- j), i < j, puts max(w_i, w_j) at i and min(w_i, w_j) at j.
// v precedes w (v ≺ w) when v is reachable from w by a sequence of shifts.

#include "signvec/signed_vector.hpp"

#include <vector>

namespace signvec {

struct ShiftMove {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const ShiftMove&, const ShiftMove&) = default;
};

/// Throws InputError unless 1 <= mv.i < mv.j <= v.dim().
[[nodiscard]] SignedVector shift(const SignedVector& v, ShiftMove mv);

/// True iff v ≺ w or v == w.
///
/// Uses prefix dominance: the coordinate multisets agree and for every prefix
/// [1..p], v has at least as many coordinates >= 1 and at least as many
/// coordinates >= 0 as w. Checked against precedes_oracle in the tests.
[[nodiscard]] bool precedes(const SignedVector& v, const SignedVector& w);

inline constexpr int kPrecedesOracleMaxDim = 8;

/// Breadth-first search over single shifts starting at w. Refuses dim > 8.
[[nodiscard]] bool precedes_oracle(const SignedVector& v, const SignedVector& w);

/// Distinct vectors reachable from v by exactly one shift, excluding v itself, in canonical order.
[[nodiscard]] std::vector<SignedVector> single_shift_images(const SignedVector& v);

/// Every single-shift image of every member is again a member.
[[nodiscard]] bool is_shifted(const VectorFamily& family);

/// Shifts members to a shifted family of the same size.
///
/// Moves (i,j) are scanned in lexicographic order; each member is replaced by
/// its image when the image is not already present, and the scan restarts
/// after any pass that changed something. Each replacement strictly lowers
/// shift_potential, so the loop terminates.
[[nodiscard]] VectorFamily compress(const VectorFamily& family);

/// Sum over coordinates of i * (v_i + 1). Every non-trivial shift strictly decreases it,
/// so sorting by it gives a linear extension of ≺.
[[nodiscard]] long shift_potential(const SignedVector& v);

} // namespace signvec
