/*
   Copyright 2026 The plbc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "plbc/weights.hpp"

namespace plbc {

enum class BoundKind { exact_zero, estimate, upper_bound };

inline const char* to_string(BoundKind k) {
    switch (k) {
        case BoundKind::exact_zero: return "exact-zero";
        case BoundKind::estimate: return "estimate";
        case BoundKind::upper_bound: return "upper-bound";
    }
    return "?";
}

/// Masking-failure figure for a given defect count: an exact zero, an exact
/// estimate, or an upper bound, as an exact rational.
struct BoundReport {
    std::size_t u = 0;
    BoundKind kind = BoundKind::exact_zero;
    Rational value;

    double value_as_double() const { return value.convert_to<double>(); }
};

/// Distribution of the rank deficiency u - rank of the defect-column
/// submatrix, over defect location sets. Probabilities are exact rationals
/// (subset counts or empirical trial counts over their total).
struct RankDistribution {
    std::size_t u = 0;
    std::map<std::size_t, Rational> deficiency_prob;
};

namespace detail {

/// Unclamped counting sum sum_{w=1}^{u} A_w C(n-w, u-w) / C(n, u): the
/// fraction of u-subsets containing a nonzero-codeword support, with
/// multiply-covered subsets counted once per codeword.
inline Rational rank_deficiency_sum(const WeightDistribution& wd, std::size_t u) {
    const std::size_t n = wd.n;
    if (u > n) throw std::invalid_argument("rank_deficiency_sum: u > n");
    if (u == 0) return Rational(0);
    BigInt num = 0;
    // C(n - w, u - w) = C(n - w, n - u); walk the second argument's column.
    BigInt col = binomial(n - 1, n - u);
    for (std::size_t w = 1; w <= u; ++w) {
        num += wd.counts[w] * col;
        // step C(m, n-u) -> C(m-1, n-u) with m = n - w
        const std::size_t m = n - w;
        if (w < u) col = col * static_cast<unsigned long long>(m - (n - u)) / static_cast<unsigned long long>(m);
    }
    return Rational(num, binomial(n, u));
}

}  // namespace detail

/// Fraction of defect location sets whose g0 columns are rank deficient,
/// bounded by codeword-support counting and clamped to 1.
inline Rational rank_deficiency_bound(const WeightDistribution& wd, std::size_t u) {
    Rational s = detail::rank_deficiency_sum(wd, u);
    return s > 1 ? Rational(1) : s;
}

/// Upper bound on the masking-failure probability at a fixed defect count;
/// exactly zero below the first nonzero codeword weight.
inline BoundReport masking_failure_upper_bound(const WeightDistribution& wd, std::size_t u) {
    return BoundReport{u, BoundKind::upper_bound, rank_deficiency_bound(wd, u)};
}

/// Exact masking-failure probability for d0 <= u <= d0 + t0, where the
/// counting sum has no double counting: half of the (unclamped) deficiency
/// fraction.
inline BoundReport masking_failure_estimate(const WeightDistribution& wd, std::size_t u, std::size_t d0) {
    if (d0 < 1) throw std::invalid_argument("masking_failure_estimate: d0 must be positive");
    const std::size_t t0 = (d0 - 1) / 2;
    if (u < d0 || u > d0 + t0)
        throw std::domain_error("masking_failure_estimate: u = " + std::to_string(u) +
                                " outside the exact range [" + std::to_string(d0) + ", " +
                                std::to_string(d0 + t0) + "]");
    return BoundReport{u, BoundKind::estimate, detail::rank_deficiency_sum(wd, u) / 2};
}

/// The three-case masking-failure figure: exact zero below d0, the exact
/// estimate through d0 + t0, the clamped upper bound beyond.
inline BoundReport masking_failure_piecewise(const WeightDistribution& wd, std::size_t u, std::size_t d0) {
    if (d0 < 1) throw std::invalid_argument("masking_failure_piecewise: d0 must be positive");
    const std::size_t t0 = (d0 - 1) / 2;
    if (u < d0) return BoundReport{u, BoundKind::exact_zero, Rational(0)};
    if (u <= d0 + t0) return masking_failure_estimate(wd, u, d0);
    return masking_failure_upper_bound(wd, u);
}

/// Masking-failure probability implied by a rank-deficiency distribution
/// under uniform data: a deficiency-j system is consistent with probability
/// 2^-j.
inline Rational lemma2_failure_from_rank(const RankDistribution& rd) {
    Rational total = 0;
    for (const auto& [j, p] : rd.deficiency_prob) total += p;
    Rational dev = total - 1;
    if (dev < 0) dev = -dev;
    if (dev > Rational(1, 1000000000))
        throw std::invalid_argument("lemma2_failure_from_rank: probabilities sum to " +
                                    total.str() + ", not 1");
    Rational acc = 0;
    for (const auto& [j, p] : rd.deficiency_prob) {
        if (j == 0) continue;
        const BigInt twoj = pow2(j);
        acc += p * Rational(twoj - 1, twoj);
    }
    return acc;
}

/// Upper bound on the masking-failure probability when the defect count is
/// binomial(n, epsilon): the per-u counting sums weighted by the binomial
/// law, each u-term clamped at its binomial probability. Exact rational
/// arithmetic throughout.
inline Rational binomial_mixture_bound(const WeightDistribution& wd, const Rational& epsilon, std::size_t d0) {
    if (epsilon < 0 || epsilon > 1) throw std::invalid_argument("binomial_mixture_bound: epsilon outside [0,1]");
    const std::size_t n = wd.n;
    const BigInt a = numerator(epsilon);
    const BigInt b = denominator(epsilon);
    if (a == 0) return Rational(0);
    if (a == b) {
        // All cells defective: only the u = n term survives.
        Rational s = d0 <= n ? detail::rank_deficiency_sum(wd, n) : Rational(0);
        return s > 1 ? Rational(1) : s;
    }

    // Common denominator b^n: numerator terms a^u (b-a)^{n-u} min(S_u, C(n,u)).
    BigInt bn = 1;
    for (std::size_t i = 0; i < n; ++i) bn *= b;
    const BigInt bma = b - a;

    BigInt weight = 1;  // a^u (b-a)^{n-u}, started at u = d0
    for (std::size_t i = 0; i < d0; ++i) weight *= a;
    for (std::size_t i = 0; i < n - d0; ++i) weight *= bma;

    BigInt acc = 0;
    for (std::size_t u = d0; u <= n; ++u) {
        const BigInt cnu = binomial(n, u);
        BigInt su = 0;
        BigInt col = binomial(n - 1, n - u);
        for (std::size_t w = 1; w <= u; ++w) {
            su += wd.counts[w] * col;
            const std::size_t m = n - w;
            if (w < u) col = col * static_cast<unsigned long long>(m - (n - u)) / static_cast<unsigned long long>(m);
        }
        if (su > cnu) su = cnu;
        acc += weight * su;
        if (u < n) {
            weight *= a;
            weight /= bma;  // exact: weight still carries (b-a)^{n-u}
        }
    }
    return Rational(acc, bn);
}

/// Floating-point evaluation of the same mixture with compensated (Kahan)
/// summation, for epsilon values not representable as a small rational.
inline double binomial_mixture_bound_compensated(const WeightDistribution& wd, double epsilon, std::size_t d0) {
    if (epsilon < 0.0 || epsilon > 1.0)
        throw std::invalid_argument("binomial_mixture_bound_compensated: epsilon outside [0,1]");
    const std::size_t n = wd.n;
    if (epsilon == 0.0) return 0.0;
    double sum = 0.0, comp = 0.0;
    for (std::size_t u = d0; u <= n; ++u) {
        const Rational cnu(binomial(n, u));
        Rational su = 0;
        for (std::size_t w = 1; w <= u; ++w) su += Rational(wd.counts[w] * binomial(n - w, u - w));
        if (su > cnu) su = cnu;
        // log-space binomial weight to survive n in the hundreds
        const double logw = std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(u) + 1) -
                            std::lgamma(static_cast<double>(n - u) + 1) +
                            static_cast<double>(u) * std::log(epsilon) +
                            static_cast<double>(n - u) * std::log1p(-epsilon);
        const double term = std::exp(logw) * (su / cnu).convert_to<double>();
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

/// Failure probability of bounded-distance decoding with no defect
/// information: u defects behave as Binomial(u, 1/2) random errors.
inline Rational normal_decoding_failure(std::size_t u, std::size_t d) {
    if (d < 1) throw std::invalid_argument("normal_decoding_failure: d must be >= 1");
    const std::size_t t = (d - 1) / 2;
    if (u <= t) return Rational(0);
    BigInt tail = 0;
    for (std::size_t j = t + 1; j <= u; ++j) tail += binomial(u, j);
    return Rational(tail, pow2(u));
}

/// Failure probability of erasure decoding with known defect locations and
/// no noise: fails exactly when u reaches the distance.
inline Rational erasure_decoding_failure(std::size_t u, std::size_t d) {
    if (d < 1) throw std::invalid_argument("erasure_decoding_failure: d must be >= 1");
    return u >= d ? Rational(1) : Rational(0);
}

/// Binomial(n, epsilon) mixture of normal_decoding_failure.
inline Rational normal_decoding_failure_mixture(std::size_t n, const Rational& epsilon, std::size_t d) {
    if (epsilon < 0 || epsilon > 1) throw std::invalid_argument("mixture: epsilon outside [0,1]");
    const BigInt a = numerator(epsilon);
    const BigInt b = denominator(epsilon);
    if (a == 0) return Rational(0);
    if (a == b) return normal_decoding_failure(n, d);
    const std::size_t t = (d - 1) / 2;
    // Common denominator b^n 2^n.
    BigInt acc = 0;
    BigInt weight = 1;
    for (std::size_t i = 0; i < n; ++i) weight *= (b - a);  // u = 0 term
    for (std::size_t u = 0; u <= n; ++u) {
        if (u > t) {
            BigInt tail = 0;
            for (std::size_t j = t + 1; j <= u; ++j) tail += binomial(u, j);
            acc += binomial(n, u) * weight * tail * pow2(n - u);
        }
        if (u < n) {
            weight *= a;
            weight /= b - a;
        }
    }
    BigInt bn = 1;
    for (std::size_t i = 0; i < n; ++i) bn *= b;
    return Rational(acc, bn * pow2(n));
}

/// Binomial(n, epsilon) mixture of erasure_decoding_failure: the upper
/// binomial tail from d.
inline Rational erasure_decoding_failure_mixture(std::size_t n, const Rational& epsilon, std::size_t d) {
    if (epsilon < 0 || epsilon > 1) throw std::invalid_argument("mixture: epsilon outside [0,1]");
    if (d > n) return Rational(0);
    const BigInt a = numerator(epsilon);
    const BigInt b = denominator(epsilon);
    if (a == 0) return Rational(0);
    if (a == b) return Rational(1);
    BigInt acc = 0;
    BigInt weight = 1;  // a^u (b-a)^{n-u} at u = d
    for (std::size_t i = 0; i < d; ++i) weight *= a;
    for (std::size_t i = 0; i < n - d; ++i) weight *= (b - a);
    for (std::size_t u = d; u <= n; ++u) {
        acc += binomial(n, u) * weight;
        if (u < n) {
            weight *= a;
            weight /= b - a;
        }
    }
    BigInt bn = 1;
    for (std::size_t i = 0; i < n; ++i) bn *= b;
    return Rational(acc, bn);
}

}  // namespace plbc
