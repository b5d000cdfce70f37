#pragma once

// Closed forms, bounds and ratios for g(n,k,l), m(n,k,l) and the split
// families, evaluated in exact integer / rational arithmetic only.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace signvec {

using BigCount = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// C(n, r); zero whenever r < 0, r > n or n < 0.
[[nodiscard]] BigCount binom(long n, long r);

/// |V(n,k,l)| = C(n, k+l) * C(k+l, k).
[[nodiscard]] BigCount family_size(long n, long k, long l);

/// g(n,k,1): k*C(n-1,k) for 2k <= n <= k^2, continued for n > k^2 by adding C(n',k)
/// for n' = k^2 .. n-1. Throws DomainError unless n >= 2k and k >= 2.
[[nodiscard]] BigCount g_closed_l1(long n, long k);

struct GBounds {
    BigCount lower;
    BigCount upper;
};

/// lower = C(n,k+l) C(k+l-1,l-1); upper = lower + C(n,2l) C(2l,l) C(n-2l-1,k-l-1).
/// Throws DomainError unless n >= k+l and k > l >= 1.
[[nodiscard]] GBounds g_bounds(long n, long k, long l);

struct EkrValue {
    BigCount value;       ///< C(n-1,k+l-1) C(k+l-1,l)
    bool in_exact_range;  ///< 2k <= n <= 3k-l
};

[[nodiscard]] EkrValue g_ekr_value(long n, long k, long l);

struct IncrementValue {
    BigCount value;                     ///< C(n,k+l-1) C(k+l-1,l-1)
    bool proven_range;                  ///< n >= 5k^2 with k > l+1, or n >= 2k^3 with k = l+1
    ExactRational conjectured_threshold; ///< (k+l-1)(k+l)/l
};

/// Throws DomainError unless k > l >= 1.
[[nodiscard]] IncrementValue increment_value(long n, long k, long l);

struct SplitValue {
    BigCount value;  ///< max over x of C(x,k) C(n-x,l)
    long argmax_x;   ///< smallest maximizing |X|
};

/// p(n,k,l), the best split family size. Throws DomainError unless n >= k+l, k,l >= 0.
[[nodiscard]] SplitValue p_split(long n, long k, long l);

struct PIncrementReport {
    BigCount increment;        ///< p(n,k,l) - p(n-1,k,l)
    BigCount drop_minus;       ///< p(n-1,k,l-1)
    BigCount drop_plus;        ///< p(n-1,k-1,l)
    ExactRational average;     ///< (drop_minus + drop_plus) / 2
    bool equals_max;           ///< increment == max(drop_minus, drop_plus)
    bool at_least_average;     ///< increment >= average
    bool at_most_min;          ///< increment <= min(drop_minus, drop_plus)
};

/// Compares the actual increment of p with the two one-step-smaller split values.
/// Throws DomainError unless n >= k+l+1 and k, l >= 1.
[[nodiscard]] PIncrementReport p_increment_report(long n, long k, long l);

/// (k+l) * 2^(k+l+2).
[[nodiscard]] BigCount n0_threshold(long k, long l);

/// |Y^{t,m}| for the profile over dimension n+1: last coordinate +1, t pluses and m minuses in [1..2t-1].
[[nodiscard]] BigCount count_Y_tm(long n, long k, long l, long t, long m);
/// |X^{t,m}| for the profile over dimension n+1: last coordinate -1, m pluses and max(t-(k-l),0) minuses in [1..2t-1].
[[nodiscard]] BigCount count_X_tm(long n, long k, long l, long t, long m);

struct RatioAlpha {
    ExactRational ratio;       ///< |Y^{t,m}| / |X^{t,m}|
    /// (k(k-l+1)/2)^(k-l) / (n-3k)^(k-l); absent when n <= 3k
    std::optional<ExactRational> alpha;
    /// sum_{t=1}^{k-l} (k/l)((2t-1)/(4k))^t + l*alpha + l/k; absent with alpha
    std::optional<ExactRational> coefficient;
};

/// alpha(n,k,l) alone. Throws DegenerateInstance when n <= 3k.
[[nodiscard]] ExactRational alpha_value(long n, long k, long l);
/// The coefficient that has to stay below 1 for the increment bound to hold.
[[nodiscard]] ExactRational coefficient_value(long n, long k, long l);

/// Throws DegenerateInstance if any binomial factor of the ratio is zero,
/// DomainError for t outside [1,k], m < 0 or l >= k.
[[nodiscard]] RatioAlpha ratio_and_alpha(long n, long k, long l, long t, long m);

/// The n from which the increment bound is claimed: 5k^2 if k > l+1, 2k^3 if k = l+1.
[[nodiscard]] long increment_threshold(long k, long l);

/// Decimal text for integers.
[[nodiscard]] std::string to_text(const BigCount& x);
/// "p/q" for rationals, or "p" when the denominator is 1.
[[nodiscard]] std::string to_text(const ExactRational& x);

} // namespace signvec
