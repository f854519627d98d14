// Copyright 2026 The bosonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Seeded property checks. Every property runs over kCases independent cases,
// each with its own generator, so a failure reports a reproducible case index.

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "bosonsim/errors.h"
#include "bosonsim/ghz.h"
#include "bosonsim/linalg.h"
#include "bosonsim/permanent.h"
#include "bosonsim/sampling.h"
#include "bosonsim/sources.h"
#include "bosonsim/validation.h"
#include "support.h"

using namespace bosonsim;
using testing_support::random_matrix;
using testing_support::relative_error;

namespace {

constexpr int kCases = 100;

std::mt19937_64 case_rng(std::uint64_t property, int c) {
    std::seed_seq seq{property, static_cast<std::uint64_t>(c)};
    return std::mt19937_64(seq);
}

double uniform(std::mt19937_64 &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

unsigned pick(std::mt19937_64 &rng, unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

/// n photons dropped independently into m modes; collisions allowed.
ModeOccupation random_occupation(std::mt19937_64 &rng, std::size_t m, unsigned n) {
    ModeOccupation s = ModeOccupation::vacuum(m);
    for (unsigned i = 0; i < n; i++) {
        s[pick(rng, 0, unsigned(m - 1))]++;
    }
    return s;
}

ModeOccupation random_collision_free(std::mt19937_64 &rng, std::size_t m, unsigned n) {
    std::vector<std::uint32_t> v(m, 0);
    std::fill(v.begin(), v.begin() + n, 1);
    std::shuffle(v.begin(), v.end(), rng);
    return ModeOccupation(v);
}

double sum(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

// ---- linalg ----------------------------------------------------------------

TEST(linalg_property, all_ones_submatrix_is_the_unitary) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(101, c);
        std::size_t n = pick(rng, 1, 12);
        auto u = haar_random_unitary(n, rng());
        ModeOccupation ones(std::vector<std::uint32_t>(n, 1));
        EXPECT_EQ(transition_submatrix(u, ones, ones), u) << "case " << c;
    }
}

TEST(linalg_property, haar_columns_are_normalized) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(102, c);
        std::size_t m = pick(rng, 1, 24);
        auto u = haar_random_unitary(m, rng());
        for (std::size_t j = 0; j < m; j++) {
            double norm = 0;
            for (std::size_t i = 0; i < m; i++) {
                norm += std::norm(u(i, j));
            }
            EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-10) << "case " << c << " column " << j;
        }
    }
}

TEST(linalg_property, singular_values_of_adjoint) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(103, c);
        std::size_t r = pick(rng, 1, 12), k = pick(rng, 1, 12);
        oracle::Rows rows(r, std::vector<oracle::cd>(k));
        std::normal_distribution<double> g;
        for (auto &row : rows) {
            for (auto &x : row) {
                x = {g(rng), g(rng)};
            }
        }
        auto a = testing_support::to_matrix(rows);
        auto s1 = svd_singular_values(a);
        auto s2 = svd_singular_values(a.adjoint());
        ASSERT_EQ(s1.size(), s2.size());
        for (std::size_t i = 0; i < s1.size(); i++) {
            EXPECT_NEAR(s1[i], s2[i], 1e-9) << "case " << c;
        }
    }
}

// ---- permanent -------------------------------------------------------------

TEST(permanent_property, row_swap) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(201, c);
        std::size_t n = pick(rng, 2, 8);
        auto rows = oracle::random_rows(n, rng);
        auto before = permanent_ryser(testing_support::to_matrix(rows));
        std::size_t i = pick(rng, 0, unsigned(n - 1)), j = pick(rng, 0, unsigned(n - 2));
        j += j >= i;
        std::swap(rows[i], rows[j]);
        EXPECT_LT(relative_error(permanent_ryser(testing_support::to_matrix(rows)), before), 1e-10) << "case " << c;
    }
}

TEST(permanent_property, transpose) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(202, c);
        auto a = random_matrix(pick(rng, 1, 8), rng);
        EXPECT_LT(relative_error(permanent_ryser(a.transpose()), permanent_ryser(a)), 1e-10) << "case " << c;
    }
}

TEST(permanent_property, row_scaling) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(203, c);
        std::size_t n = pick(rng, 1, 8);
        auto a = random_matrix(n, rng);
        Complex k{uniform(rng, -3, 3), uniform(rng, -3, 3)};
        std::size_t row = pick(rng, 0, unsigned(n - 1));
        auto b = a;
        for (std::size_t j = 0; j < n; j++) {
            b(row, j) *= k;
        }
        EXPECT_LT(relative_error(permanent_ryser(b), k * permanent_ryser(a)), 1e-10) << "case " << c;
    }
}

TEST(permanent_property, block_diagonal) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(204, c);
        std::size_t n1 = pick(rng, 1, 6), n2 = pick(rng, 1, 6);
        auto a = random_matrix(n1, rng);
        auto b = random_matrix(n2, rng);
        ComplexMatrix block(n1 + n2, n1 + n2);
        for (std::size_t i = 0; i < n1; i++) {
            for (std::size_t j = 0; j < n1; j++) {
                block(i, j) = a(i, j);
            }
        }
        for (std::size_t i = 0; i < n2; i++) {
            for (std::size_t j = 0; j < n2; j++) {
                block(n1 + i, n1 + j) = b(i, j);
            }
        }
        auto expected = permanent_ryser(a) * permanent_ryser(b);
        EXPECT_LT(relative_error(permanent_ryser(block), expected), 1e-10) << "case " << c;
        // Compare against the definition too, for sizes it can afford.
        if (n1 + n2 <= 9) {
            EXPECT_LT(relative_error(oracle::permanent(testing_support::to_rows(block)), expected), 1e-10) << c;
        }
    }
}

TEST(permanent_property, ryser_matches_naive) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(205, c);
        auto a = random_matrix(1 + c % 8, rng);
        auto naive = permanent_naive(a);
        EXPECT_LT(relative_error(permanent_ryser(a), naive), 1e-10) << "case " << c;
        EXPECT_LT(relative_error(oracle::permanent(testing_support::to_rows(a)), naive), 1e-10) << "case " << c;
    }
}

// ---- sources ---------------------------------------------------------------

TEST(sources_property, purity_invariant_under_basis_change) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(301, c);
        std::size_t grid = pick(rng, 16, 48);
        ComplexMatrix f;
        if (c % 2) {
            f = gaussian_jsa(uniform(rng, 0.5, 3), uniform(rng, 0.5, 3), uniform(rng, -1.5, 1.5), grid, 12.0).grid;
        } else {
            f = random_matrix(grid, rng);
        }
        double base = schmidt_purity(f);
        auto left = haar_random_unitary(grid, rng());
        auto right = haar_random_unitary(grid, rng());
        EXPECT_NEAR(schmidt_purity(left * f), base, 1e-9) << "case " << c;
        EXPECT_NEAR(schmidt_purity(f * right), base, 1e-9) << "case " << c;
        EXPECT_NEAR(schmidt_purity(left * f * right), base, 1e-9) << "case " << c;
    }
}

TEST(sources_property, purity_decreases_away_from_factorable_point) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(302, c);
        double spm = uniform(rng, 0.5, 2.0);
        double sp = spm * std::sqrt(2.0) * uniform(rng, 1.0, 1.6);
        // The cross term vanishes where sin(2 theta) = -2 p / q.
        double t0 = -0.5 * std::asin(2 * spm * spm / (sp * sp));
        double prev_svd = 2, prev_exact = 2;
        for (int j = 0; j < 8; j++) {
            double theta = t0 + 0.05 * j;
            double exact = oracle::gaussian_purity(sp, spm, theta);
            if (j == 0) {
                EXPECT_NEAR(exact, 1.0, 1e-12) << "case " << c;
            }
            double span = 8 * sp;
            JointSpectrum jsa;
            do {
                span *= 1.5;
                jsa = gaussian_jsa(sp, spm, theta, 128, span);
            } while (jsa.truncated);
            double p = schmidt_purity(jsa);
            EXPECT_LT(exact, prev_exact + 1e-12) << "case " << c << " step " << j;
            EXPECT_LT(p, prev_svd + 1e-9) << "case " << c << " step " << j;
            prev_exact = exact;
            prev_svd = p;
        }
        EXPECT_LT(prev_svd, 0.99) << "case " << c;
    }
}

TEST(sources_property, hom_dip_even_and_monotone) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(303, c);
        double v = uniform(rng, 0, 1), sigma = uniform(rng, 0.1, 5);
        std::vector<double> taus(20);
        for (auto &t : taus) {
            t = uniform(rng, 0, 6 * sigma);
        }
        std::sort(taus.begin(), taus.end());
        double prev = -1;
        for (double t : taus) {
            double f = hom_dip(v, sigma, t);
            EXPECT_EQ(f, hom_dip(v, sigma, -t)) << "case " << c;
            EXPECT_GE(f, prev) << "case " << c;
            prev = f;
        }
    }
}

TEST(sources_property, herald_rate_converges) {
    constexpr std::uint64_t pulses = 1'000'000;
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(304, c);
        std::vector<SourceParams> params(4);
        for (auto &p : params) {
            p.epsilon = uniform(rng, 0.01, 0.5);
            p.eta_herald = uniform(rng, 0.3, 1);
            p.eta_detect = uniform(rng, 0.3, 1);
        }
        Rng gen(rng());
        std::vector<SourceOutcome> out(params.size());
        std::vector<std::uint64_t> heralds(params.size(), 0);
        for (std::uint64_t t = 0; t < pulses; t++) {
            fire_sources_into(params, gen, out);
            for (std::size_t i = 0; i < out.size(); i++) {
                heralds[i] += out[i].heralded;
            }
        }
        for (std::size_t i = 0; i < params.size(); i++) {
            double p = params[i].epsilon * params[i].eta_herald * params[i].eta_detect;
            double sigma = std::sqrt(p * (1 - p) / pulses);
            EXPECT_NEAR(double(heralds[i]) / pulses, p, 5 * sigma) << "case " << c << " source " << i;
        }
    }
}

// ---- ghz -------------------------------------------------------------------

namespace {

GhzModel random_model(std::mt19937_64 &rng, unsigned max_photons) {
    GhzModel m;
    m.n_photons = pick(rng, 2, max_photons);
    m.population = uniform(rng, 0, 1);
    m.coherence = uniform(rng, 0, m.population);
    return m;
}

}  // namespace

TEST(ghz_property, distributions_normalized) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(401, c);
        auto m = random_model(rng, 14);
        EXPECT_NEAR(sum(hv_outcome_distribution(m)), 1.0, 1e-12) << "case " << c;
        EXPECT_NEAR(sum(theta_outcome_distribution(m, uniform(rng, -M_PI, M_PI))), 1.0, 1e-12) << "case " << c;
    }
}

TEST(ghz_property, theta_distribution_nonnegative_iff_coherence_at_most_one) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(402, c);
        auto m = random_model(rng, 14);
        double theta = uniform(rng, -M_PI, M_PI);
        for (double p : theta_outcome_distribution(m, theta)) {
            ASSERT_GE(p, 0.0) << "case " << c;
        }
        // Past C = 1 the parity-resolved weight (1 - C cos(N theta)) / 2^N goes
        // negative at theta = 0, and the model refuses such parameters.
        GhzModel bad = m;
        bad.coherence = uniform(rng, 1.0 + 1e-9, 2.0);
        bad.population = 1.0;
        EXPECT_LT((1 - bad.coherence * std::cos(0.0)) / std::ldexp(1.0, int(bad.n_photons)), 0.0);
        EXPECT_THROW(theta_outcome_distribution(bad, theta), ContractError) << "case " << c;
    }
}

TEST(ghz_property, estimator_closure) {
    int within = 0;
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(403, c);
        GhzModel m;
        m.n_photons = pick(rng, 2, 6);
        m.population = uniform(rng, 0.2, 0.99);
        m.coherence = uniform(rng, 0, m.population);
        auto run = run_ghz_experiment(m, 100'000, rng());
        bool ok = std::abs(run.population.value - m.population) <= 5 * run.population.sigma &&
                  std::abs(run.coherence.value - m.coherence) <= 5 * run.coherence.sigma;
        within += ok;
    }
    EXPECT_GE(within, 99);
}

TEST(ghz_property, parity_period_and_antiperiod) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(404, c);
        auto m = random_model(rng, 14);
        double theta = uniform(rng, -M_PI, M_PI);
        double step = M_PI / m.n_photons;
        double here = parity_expectation(theta_outcome_distribution(m, theta));
        EXPECT_NEAR(parity_expectation(theta_outcome_distribution(m, theta + 2 * step)), here, 1e-12) << c;
        EXPECT_NEAR(parity_expectation(theta_outcome_distribution(m, theta + step)), -here, 1e-12) << c;
        EXPECT_NEAR(theta_expectation(m, theta + step), -theta_expectation(m, theta), 1e-12) << c;
    }
}

// ---- sampling --------------------------------------------------------------

TEST(sampling_property, exact_distribution_normalized) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(501, c);
        std::size_t m = pick(rng, 1, 12);
        unsigned n = pick(rng, 1, std::min<unsigned>(5, unsigned(m)));
        auto u = haar_random_unitary(m, rng());
        auto s = random_occupation(rng, m, n);
        auto d = exact_distribution(u, s, true);
        EXPECT_NEAR(sum(d.probabilities()), 1.0, 1e-9) << "case " << c << " input " << s.str();
    }
}

TEST(sampling_property, permutation_routes_classically) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(502, c);
        std::size_t m = pick(rng, 1, 12);
        unsigned n = pick(rng, 1, std::min<unsigned>(5, unsigned(m)));
        std::vector<std::size_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        ComplexMatrix u(m, m);
        for (std::size_t i = 0; i < m; i++) {
            u(i, perm[i]) = 1;
        }
        auto s = random_occupation(rng, m, n);
        ModeOccupation t = ModeOccupation::vacuum(m);
        for (std::size_t i = 0; i < m; i++) {
            t[perm[i]] = s[i];
        }
        for (Hypothesis h : {Hypothesis::indistinguishable, Hypothesis::distinguishable}) {
            auto d = hypothesis_distribution(u, s, true, h);
            for (std::size_t i = 0; i < d.size(); i++) {
                EXPECT_NEAR(d.probability(i), d.outcome(i) == t ? 1.0 : 0.0, 1e-12) << "case " << c;
            }
        }
    }
}

TEST(sampling_property, single_photon_is_classical) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(503, c);
        std::size_t m = pick(rng, 1, 12);
        auto u = haar_random_unitary(m, rng());
        auto s = random_occupation(rng, m, 1);
        bool collisions = c % 2;
        auto q = exact_distribution(u, s, collisions);
        auto p = distinguishable_distribution(u, s, collisions);
        ASSERT_TRUE(q.same_outcome_set(p));
        for (std::size_t i = 0; i < q.size(); i++) {
            EXPECT_DOUBLE_EQ(q.probability(i), p.probability(i)) << "case " << c;
        }
    }
}

TEST(sampling_property, trigger_patterns_exchangeable) {
    constexpr unsigned k = 12, n = 3;
    const double critical = oracle::chi2_quantile(double(oracle::binomial(k, n) - 1), 2.3263);
    int rejected = 0;
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(504, c);
        SourceParams p;
        p.epsilon = uniform(rng, 0.15, 0.3);
        p.eta_herald = uniform(rng, 0.7, 1.0);
        std::vector<SourceParams> sources(k, p);
        auto u = haar_random_unitary(k, rng());
        auto result = scattershot_run(u, sources, 1'000'000, n, rng());
        std::map<ModeOccupation, std::uint64_t> counts;
        for (const auto &r : result.records) {
            counts[r.trigger_pattern]++;
        }
        ASSERT_EQ(counts.size(), oracle::binomial(k, n)) << "case " << c;
        double expected = double(result.records.size()) / double(counts.size());
        double chi2 = 0;
        for (const auto &[pattern, count] : counts) {
            chi2 += (count - expected) * (count - expected) / expected;
        }
        rejected += chi2 > critical;
    }
    // One percent test level; five rejections in a hundred is far in the tail.
    EXPECT_LE(rejected, 5);
}

TEST(sampling_property, scattershot_gain_over_standard) {
    constexpr std::uint64_t pulses = 1'000'000;
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(505, c);
        unsigned k = pick(rng, 6, 12), n = pick(rng, 2, 3);
        SourceParams p;
        p.epsilon = uniform(rng, 0.25, 0.5);
        p.eta_herald = uniform(rng, 0.6, 1.0);
        double eta = p.eta_herald * p.eta_detect;
        std::vector<SourceParams> sources(k, p);
        auto u = haar_random_unitary(k, rng());
        auto scatter = scattershot_run(u, sources, pulses, n, rng());

        // Standard experiment: n fixed sources, every one must herald.
        std::vector<SourceParams> fixed(n, p);
        Rng gen(rng());
        std::vector<SourceOutcome> out(n);
        std::uint64_t standard = 0;
        for (std::uint64_t t = 0; t < pulses; t++) {
            fire_sources_into(fixed, gen, out);
            standard += std::all_of(out.begin(), out.end(), [](const SourceOutcome &o) { return o.heralded; });
        }
        double ratio = double(scatter.report.herald_events) / double(standard);
        double predicted = double(oracle::binomial(k, n)) * std::pow(1 - p.epsilon * eta, k - n);
        EXPECT_NEAR(ratio / predicted, 1.0, 0.1) << "case " << c << " k=" << k << " n=" << n;
    }
}

// ---- validation ------------------------------------------------------------

TEST(validation_property, similarity_distance_bounds) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(601, c);
        std::size_t m = pick(rng, 2, 8);
        unsigned n = pick(rng, 1, std::min<unsigned>(3, unsigned(m - 1)));
        auto outcomes = enumerate_outcomes(m, n, c % 2 == 0);
        std::vector<double> p(outcomes.size()), q(outcomes.size());
        std::exponential_distribution<double> e;
        for (std::size_t i = 0; i < p.size(); i++) {
            p[i] = (c % 3 == 0 && i % 4 == 0) ? 0.0 : e(rng);
            q[i] = e(rng);
        }
        double sp = sum(p), sq = sum(q);
        for (std::size_t i = 0; i < p.size(); i++) {
            p[i] /= sp;
            q[i] /= sq;
        }
        OutcomeDistribution dp(outcomes, p), dq(outcomes, q);
        double s = similarity(dp, dq), d = tv_distance(dp, dq);
        EXPECT_NEAR(s, oracle::bhattacharyya(p, q), 1e-12);
        EXPECT_NEAR(d, oracle::total_variation(p, q), 1e-12);
        EXPECT_LE(1 - s, d + 1e-12) << "case " << c;
        EXPECT_LE(d, std::sqrt(std::max(0.0, 1 - s * s)) + 1e-12) << "case " << c;
    }
}

TEST(validation_property, likelihood_ratio_drifts_to_truth) {
    constexpr std::uint64_t samples = 500;
    for (Hypothesis truth : {Hypothesis::indistinguishable, Hypothesis::distinguishable}) {
        Hypothesis other =
            truth == Hypothesis::indistinguishable ? Hypothesis::distinguishable : Hypothesis::indistinguishable;
        int positive = 0;
        for (int c = 0; c < kCases; c++) {
            auto rng = case_rng(truth == Hypothesis::indistinguishable ? 602 : 603, c);
            auto u = haar_random_unitary(12, rng());
            auto in = random_collision_free(rng, 12, 3);
            HypothesisModel t(u, truth, false), o(u, other, false);
            std::vector<InputOutputSample> data;
            for (const auto &out : sample_outputs(t.distribution(in), samples, rng())) {
                data.push_back({in, out});
            }
            auto r = likelihood_ratio_test(data, t.oracle(), o.oracle(), 1e300);
            positive += r.lr_trajectory.back() > 0;
        }
        EXPECT_GE(positive, 95) << "truth " << int(truth);
    }
}

TEST(validation_property, aggregate_invariant_under_record_order) {
    for (int c = 0; c < kCases; c++) {
        auto rng = case_rng(604, c);
        unsigned k = pick(rng, 4, 8);
        SourceParams p;
        p.epsilon = uniform(rng, 0.2, 0.5);
        std::vector<SourceParams> sources(k, p);
        auto u = haar_random_unitary(k, rng());
        auto records = scattershot_run(u, sources, 4000, 2, rng()).records;
        bool collisions = c % 2;
        auto a = scattershot_aggregate_validation(records, u, 5.0, Hypothesis::distinguishable, collisions);
        std::shuffle(records.begin(), records.end(), rng);
        auto b = scattershot_aggregate_validation(records, u, 5.0, Hypothesis::distinguishable, collisions);

        ASSERT_EQ(a.groups.size(), b.groups.size()) << "case " << c;
        for (std::size_t g = 0; g < a.groups.size(); g++) {
            EXPECT_EQ(a.groups[g].input, b.groups[g].input);
            EXPECT_EQ(a.groups[g].samples, b.groups[g].samples);
            EXPECT_EQ(a.groups[g].similarity, b.groups[g].similarity);
            EXPECT_EQ(a.groups[g].distance, b.groups[g].distance);
        }
        EXPECT_EQ(a.mean_similarity, b.mean_similarity) << "case " << c;
        EXPECT_EQ(a.sd_similarity, b.sd_similarity);
        EXPECT_EQ(a.mean_distance, b.mean_distance);
        EXPECT_EQ(a.sd_distance, b.sd_distance);
        EXPECT_EQ(a.pooled_similarity, b.pooled_similarity);
        EXPECT_EQ(a.pooled_distance, b.pooled_distance);
        EXPECT_EQ(a.pooled.lr_trajectory, b.pooled.lr_trajectory);
        EXPECT_EQ(a.pooled.verdict, b.pooled.verdict);
        EXPECT_EQ(a.skipped_collisions, b.skipped_collisions);
    }
}
