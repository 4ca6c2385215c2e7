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
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "plbc/bounds.hpp"
#include "plbc/codec.hpp"
#include "plbc/rng.hpp"

namespace plbc {

/// Cell-level channel parameters: each cell is independently defective with
/// probability epsilon (stuck value uniform), and the additive error flips a
/// bit with probability p.
struct ChannelParams {
    double epsilon = 0.0;
    double p = 0.0;

    void validate() const {
        if (epsilon < 0.0 || epsilon > 1.0 || p < 0.0 || p > 1.0)
            throw std::invalid_argument("ChannelParams: probabilities must lie in [0,1]");
    }
};

enum class Scheme { optimal, one_step, two_step, normal_bch, erasure_bch };

inline const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::optimal: return "optimal";
        case Scheme::one_step: return "one-step";
        case Scheme::two_step: return "two-step";
        case Scheme::normal_bch: return "normal-bch";
        case Scheme::erasure_bch: return "erasure-bch";
    }
    return "?";
}

inline Scheme parse_scheme(const std::string& s) {
    if (s == "optimal") return Scheme::optimal;
    if (s == "one-step") return Scheme::one_step;
    if (s == "two-step") return Scheme::two_step;
    if (s == "normal-bch") return Scheme::normal_bch;
    if (s == "erasure-bch") return Scheme::erasure_bch;
    throw std::invalid_argument("unknown scheme '" + s + "'");
}

inline bool is_encoder_scheme(Scheme s) {
    return s == Scheme::optimal || s == Scheme::one_step || s == Scheme::two_step;
}

/// Defect-count model for a trial: exactly u defects at uniform locations, or
/// each cell independently defective with probability epsilon.
struct DefectModel {
    enum class Kind { fixed_u, binomial } kind = Kind::fixed_u;
    std::size_t u = 0;
    double epsilon = 0.0;

    static DefectModel fixed(std::size_t u) { return DefectModel{Kind::fixed_u, u, 0.0}; }
    static DefectModel binomial(double epsilon) { return DefectModel{Kind::binomial, 0, epsilon}; }
};

struct SimConfig {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    DefectModel defects;
    Scheme scheme = Scheme::two_step;
    double noise_p = 0.0;
    unsigned threads = 1;
    bool track_rank = false;
    LocationPolicy locations = LocationPolicy::highest_first;

    void validate(std::size_t n) const {
        if (trials < 1) throw std::invalid_argument("SimConfig: trials must be >= 1");
        if (defects.kind == DefectModel::Kind::fixed_u && defects.u > n)
            throw std::invalid_argument("SimConfig: fixed defect count exceeds n");
        ChannelParams{defects.epsilon, noise_p}.validate();
    }
};

/// Outcome of a batch of trials. Identical (code, config) inputs produce an
/// identical report regardless of thread count or execution order.
struct SimReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double rate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    std::map<std::size_t, std::uint64_t> deficiency_counts;  // filled when rank tracking is on
};

/// 99% Wilson score interval for failures/trials.
inline std::pair<double, double> wilson99(std::uint64_t failures, std::uint64_t trials) {
    constexpr double z = 2.5758293035489004;  // two-sided 99% normal quantile
    const double nt = static_cast<double>(trials);
    const double p = static_cast<double>(failures) / nt;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nt;
    const double center = (p + z2 / (2.0 * nt)) / denom;
    const double half = (z / denom) * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

/// Draws a defect vector: fixed-u mode picks a uniform u-subset (partial
/// Fisher-Yates) with independent uniform stuck values; binomial mode flips
/// an epsilon-coin per cell.
inline DefectVector sample_defects(std::size_t n, const DefectModel& model, RngStream& rng) {
    DefectVector s(n);
    if (model.kind == DefectModel::Kind::fixed_u) {
        if (model.u > n) throw std::invalid_argument("sample_defects: u > n");
        std::vector<std::size_t> pool(n);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t i = 0; i < model.u; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
            std::swap(pool[i], pool[j]);
            s.mark(pool[i], rng.next_bit());
        }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            if (rng.bernoulli(model.epsilon)) s.mark(i, rng.next_bit());
    }
    return s;
}

/// i.i.d. additive error bits, each set with probability p. p = 0 draws
/// nothing so that noise-free configurations stay aligned across runs.
inline BitVector sample_noise(std::size_t n, double p, RngStream& rng) {
    if (p == 0.0) return BitVector(n);
    BitVector z(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.bernoulli(p)) z.set(i, true);
    return z;
}

namespace detail {

inline std::size_t submatrix_rank(const PlbcCode& code, const std::vector<std::size_t>& locations) {
    std::vector<BitVector> rows;
    rows.reserve(locations.size());
    for (std::size_t loc : locations) rows.push_back(code.g0_cols.row(loc));
    return eliminate(rows, code.l);
}

template <typename PerTrial>
inline void run_trials(std::uint64_t trials, unsigned threads, PerTrial&& body) {
    const unsigned nthreads = std::max(1u, threads);
    if (nthreads == 1 || trials < 2 * nthreads) {
        for (std::uint64_t t = 0; t < trials; ++t) body(t);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::uint64_t chunk = (trials + nthreads - 1) / nthreads;
    for (unsigned i = 0; i < nthreads; ++i) {
        const std::uint64_t lo = i * chunk;
        const std::uint64_t hi = std::min(trials, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::uint64_t t = lo; t < hi; ++t) body(t);
        });
    }
    for (auto& th : pool) th.join();
}

struct TrialCounters {
    std::uint64_t failures = 0;
    std::map<std::size_t, std::uint64_t> deficiency;
};

}  // namespace detail

/// Monte Carlo masking-failure rate under the configured encoder scheme.
/// Trial t draws from an independent stream derived from (seed, t): message
/// first, then defects, so reports are reproducible and schedule-independent.
inline SimReport run_masking_trials(const PlbcCode& code, const SimConfig& config) {
    config.validate(code.n);
    if (!is_encoder_scheme(config.scheme))
        throw std::invalid_argument("run_masking_trials: scheme must be an encoder scheme");

    const unsigned nthreads = std::max(1u, config.threads);
    std::vector<detail::TrialCounters> partial(nthreads);
    const std::uint64_t chunk = (config.trials + nthreads - 1) / nthreads;

    auto body = [&](std::uint64_t t) {
        RngStream rs(config.seed, t);
        const BitVector w = rs.bits(code.k);
        const DefectVector s = sample_defects(code.n, config.defects, rs);
        LocationSelector sel{config.locations, &rs};
        EncodeResult res = config.scheme == Scheme::optimal    ? encode_optimal(code, w, s)
                           : config.scheme == Scheme::one_step ? encode_one_step(code, w, s, sel)
                                                               : encode_two_step(code, w, s, sel);
        detail::TrialCounters& mine = partial[static_cast<std::size_t>(std::min<std::uint64_t>(
            t / chunk, nthreads - 1))];
        if (res.unmasked > 0) ++mine.failures;
        if (config.track_rank) {
            const auto psi = s.locations();
            const std::size_t deficiency = psi.size() - detail::submatrix_rank(code, psi);
            ++mine.deficiency[deficiency];
        }
    };
    detail::run_trials(config.trials, config.threads, body);

    SimReport report;
    report.trials = config.trials;
    report.seed = config.seed;
    for (const auto& c : partial) {
        report.failures += c.failures;
        for (const auto& [j, cnt] : c.deficiency) report.deficiency_counts[j] += cnt;
    }
    report.rate = static_cast<double>(report.failures) / static_cast<double>(report.trials);
    std::tie(report.ci_low, report.ci_high) = wilson99(report.failures, report.trials);
    return report;
}

/// Distribution of u - rank over the g0 columns of defect location sets:
/// exact enumeration of all C(n,u) subsets when that count is at most 10^6,
/// Monte Carlo otherwise.
inline RankDistribution rank_distribution(const PlbcCode& code, std::size_t u, std::uint64_t trials,
                                          std::uint64_t seed) {
    if (u > code.n) throw std::invalid_argument("rank_distribution: u > n");
    RankDistribution rd;
    rd.u = u;
    if (u == 0) {
        rd.deficiency_prob[0] = 1;
        return rd;
    }

    const BigInt subsets = binomial(code.n, u);
    if (subsets <= 1000000) {
        std::map<std::size_t, BigInt> counts;
        std::vector<std::size_t> comb(u);
        for (std::size_t i = 0; i < u; ++i) comb[i] = i;
        do {
            ++counts[u - detail::submatrix_rank(code, comb)];
        } while (next_combination(comb, code.n));
        for (const auto& [j, c] : counts) rd.deficiency_prob[j] = Rational(c, subsets);
        return rd;
    }

    if (trials < 1) throw std::invalid_argument("rank_distribution: trials must be >= 1 in Monte Carlo mode");
    std::map<std::size_t, std::uint64_t> counts;
    const DefectModel model = DefectModel::fixed(u);
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rs(seed, t);
        const DefectVector s = sample_defects(code.n, model, rs);
        ++counts[u - detail::submatrix_rank(code, s.locations())];
    }
    for (const auto& [j, c] : counts) rd.deficiency_prob[j] = Rational(c, trials);
    return rd;
}

/// A PBCH code together with the rate-matched conventional BCH code used by
/// the no-side-information baselines: same length, same dimension, distance
/// d0.
struct ComparisonFamily {
    PlbcCode code;
    BitMatrix bch_rows;       // k x n generator rows x^i * q(x) of the matched BCH code
    std::size_t bch_distance; // = code.d0

    static ComparisonFamily from_pbch(const PbchSpec& spec) {
        ComparisonFamily fam;
        fam.code = pbch_build(spec);
        const BinaryPolynomial q = cyclic_dual_generator(spec.n, spec.g0);
        if (static_cast<std::size_t>(q.degree()) != fam.code.l)
            throw std::logic_error("ComparisonFamily: dual generator degree mismatch");
        fam.bch_rows = BitMatrix(0, spec.n);
        for (std::size_t i = 0; i < fam.code.k; ++i)
            fam.bch_rows.append_row((BinaryPolynomial::monomial(i) * q).to_bitvector(spec.n));
        fam.bch_distance = fam.code.d0;
        return fam;
    }
};

/// One pass of coupled trials: all schemes see the same per-trial message,
/// defects and noise, so per-trial indicators are directly comparable.
/// Failure criteria: bounded-distance radius for normal decoding, the
/// erasure capacity threshold for erasure decoding, and unmasked > 0 for the
/// masking encoders (r = 0 makes masking failure and decoding failure
/// coincide).
inline std::vector<SimReport> run_decoding_comparison(const ComparisonFamily& family,
                                                      const std::vector<Scheme>& schemes,
                                                      const SimConfig& config) {
    const PlbcCode& code = family.code;
    config.validate(code.n);
    const std::size_t d = family.bch_distance;
    const std::size_t radius = (d - 1) / 2;

    const unsigned nthreads = std::max(1u, config.threads);
    std::vector<std::vector<std::uint64_t>> partial(nthreads,
                                                    std::vector<std::uint64_t>(schemes.size(), 0));
    const std::uint64_t chunk = (config.trials + nthreads - 1) / nthreads;

    auto body = [&](std::uint64_t t) {
        RngStream rs(config.seed, t);
        const BitVector msg = rs.bits(code.k);
        const DefectVector s = sample_defects(code.n, config.defects, rs);
        const BitVector z = sample_noise(code.n, config.noise_p, rs);
        const std::size_t u = s.count();
        auto& mine = partial[static_cast<std::size_t>(std::min<std::uint64_t>(t / chunk, nthreads - 1))];

        for (std::size_t i = 0; i < schemes.size(); ++i) {
            bool fail = false;
            switch (schemes[i]) {
                case Scheme::normal_bch: {
                    const BitVector c = family.bch_rows.combine_rows(msg);
                    fail = (apply_defects(c, s, z) ^ c).weight() > radius;
                    break;
                }
                case Scheme::erasure_bch: {
                    const std::size_t noise_outside = (z ^ (z & s.is_defect)).weight();
                    fail = 2 * noise_outside + u >= d;
                    break;
                }
                case Scheme::optimal:
                    fail = encode_optimal(code, msg, s).unmasked > 0;
                    break;
                case Scheme::one_step:
                    fail = encode_one_step(code, msg, s).unmasked > 0;
                    break;
                case Scheme::two_step:
                    fail = encode_two_step(code, msg, s).unmasked > 0;
                    break;
            }
            if (fail) ++mine[i];
        }
    };
    detail::run_trials(config.trials, config.threads, body);

    std::vector<SimReport> reports(schemes.size());
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        SimReport& rep = reports[i];
        rep.trials = config.trials;
        rep.seed = config.seed;
        for (const auto& c : partial) rep.failures += c[i];
        rep.rate = static_cast<double>(rep.failures) / static_cast<double>(rep.trials);
        std::tie(rep.ci_low, rep.ci_high) = wilson99(rep.failures, rep.trials);
    }
    return reports;
}

}  // namespace plbc
