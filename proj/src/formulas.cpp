#include "signvec/formulas.hpp"

#include "signvec/errors.hpp"

#include <algorithm>

namespace signvec {

namespace {

std::string args(long a, long b, long c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

ExactRational pow_rational(const ExactRational& base, long e) {
    ExactRational out = 1;
    for (long i = 0; i < e; ++i) out *= base;
    return out;
}

} // namespace

BigCount binom(long n, long r) {
    if (n < 0 || r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigCount c = 1;
    for (long i = 1; i <= r; ++i) {
        c *= n - r + i;
        c /= i;
    }
    return c;
}

BigCount family_size(long n, long k, long l) { return binom(n, k + l) * binom(k + l, k); }

BigCount g_closed_l1(long n, long k) {
    if (k < 2) throw DomainError("g_closed_l1 needs k >= 2, got k=" + std::to_string(k));
    if (n < 2 * k) throw DomainError("g_closed_l1 needs n >= 2k, got n=" + std::to_string(n));
    const long sq = k * k;
    if (n <= sq) return k * binom(n - 1, k);
    BigCount value = k * binom(sq - 1, k);
    for (long m = sq; m <= n - 1; ++m) value += binom(m, k);
    return value;
}

GBounds g_bounds(long n, long k, long l) {
    if (!(k > l && l >= 1 && n >= k + l)) throw DomainError("g_bounds undefined at " + args(n, k, l));
    GBounds b;
    b.lower = binom(n, k + l) * binom(k + l - 1, l - 1);
    b.upper = b.lower + binom(n, 2 * l) * binom(2 * l, l) * binom(n - 2 * l - 1, k - l - 1);
    return b;
}

EkrValue g_ekr_value(long n, long k, long l) {
    return {binom(n - 1, k + l - 1) * binom(k + l - 1, l), 2 * k <= n && n <= 3 * k - l};
}

IncrementValue increment_value(long n, long k, long l) {
    if (!(k > l && l >= 1)) throw DomainError("increment_value needs k > l >= 1, got " + args(n, k, l));
    IncrementValue r;
    r.value = binom(n, k + l - 1) * binom(k + l - 1, l - 1);
    r.proven_range = (k > l + 1 && n >= 5 * k * k) || (k == l + 1 && n >= 2 * k * k * k);
    r.conjectured_threshold = ExactRational((k + l - 1) * (k + l), l);
    return r;
}

SplitValue p_split(long n, long k, long l) {
    if (k < 0 || l < 0 || n < k + l) throw DomainError("p_split undefined at " + args(n, k, l));
    SplitValue best{-1, k};
    for (long x = k; x <= n - l; ++x) {
        BigCount v = binom(x, k) * binom(n - x, l);
        if (v > best.value) best = {v, x};
    }
    return best;
}

PIncrementReport p_increment_report(long n, long k, long l) {
    if (k < 1 || l < 1 || n < k + l + 1) throw DomainError("p_increment_report undefined at " + args(n, k, l));
    PIncrementReport r;
    r.increment = p_split(n, k, l).value - p_split(n - 1, k, l).value;
    r.drop_minus = p_split(n - 1, k, l - 1).value;
    r.drop_plus = p_split(n - 1, k - 1, l).value;
    r.average = ExactRational(r.drop_minus + r.drop_plus, 2);
    r.equals_max = r.increment == std::max(r.drop_minus, r.drop_plus);
    r.at_least_average = ExactRational(r.increment) >= r.average;
    r.at_most_min = r.increment <= std::min(r.drop_minus, r.drop_plus);
    return r;
}

BigCount n0_threshold(long k, long l) {
    BigCount p = 1;
    p <<= static_cast<unsigned>(k + l + 2);
    return BigCount(k + l) * p;
}

BigCount count_Y_tm(long n, long k, long l, long t, long m) {
    const long w = 2 * t - 1;
    const long rest = n - w;
    return binom(w, m) * binom(w - m, t) * binom(rest, l - m) * binom(rest - l + m, k - 1 - t);
}

BigCount count_X_tm(long n, long k, long l, long t, long m) {
    const long w = 2 * t - 1;
    const long rest = n - w;
    const long d = std::max(t - (k - l), 0L);
    return binom(w, m) * binom(w - m, d) * binom(rest, k - m) * binom(rest - k + m, l - 1 - d);
}

ExactRational alpha_value(long n, long k, long l) {
    if (!(k > l && l >= 1)) throw DomainError("alpha needs k > l >= 1, got " + args(n, k, l));
    if (n <= 3 * k) throw DegenerateInstance("alpha needs n > 3k, got " + args(n, k, l));
    const ExactRational base(k * (k - l + 1), 2 * (n - 3 * k));
    return pow_rational(base, k - l);
}

ExactRational coefficient_value(long n, long k, long l) {
    ExactRational sum = 0;
    for (long t = 1; t <= k - l; ++t)
        sum += ExactRational(k, l) * pow_rational(ExactRational(2 * t - 1, 4 * k), t);
    return sum + ExactRational(l) * alpha_value(n, k, l) + ExactRational(l, k);
}

RatioAlpha ratio_and_alpha(long n, long k, long l, long t, long m) {
    if (!(k > l && l >= 1)) throw DomainError("ratio_and_alpha needs k > l >= 1");
    if (t < 1 || t > k || m < 0) throw DomainError("ratio_and_alpha needs 1 <= t <= k and m >= 0");
    const long w = 2 * t - 1;
    const long rest = n - w;
    const long d = std::max(t - (k - l), 0L);
    const BigCount factors[] = {
        binom(w, m),    binom(w - m, t), binom(rest, l - m), binom(rest - l + m, k - 1 - t),
        binom(w - m, d), binom(rest, k - m), binom(rest - k + m, l - 1 - d),
    };
    for (const auto& f : factors)
        if (f == 0)
            throw DegenerateInstance("ratio at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                     ", l=" + std::to_string(l) + ", t=" + std::to_string(t) +
                                     ", m=" + std::to_string(m) + " has a zero binomial factor");
    RatioAlpha r;
    r.ratio = ExactRational(count_Y_tm(n, k, l, t, m), count_X_tm(n, k, l, t, m));
    if (n > 3 * k) {
        r.alpha = alpha_value(n, k, l);
        r.coefficient = coefficient_value(n, k, l);
    }
    return r;
}

long increment_threshold(long k, long l) {
    if (!(k > l && l >= 1)) throw DomainError("increment_threshold needs k > l >= 1");
    return k == l + 1 ? 2 * k * k * k : 5 * k * k;
}

std::string to_text(const BigCount& x) { return x.str(); }

std::string to_text(const ExactRational& x) {
    const auto num = boost::multiprecision::numerator(x);
    const auto den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace signvec
