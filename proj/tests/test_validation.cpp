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

#include "bosonsim/validation.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bosonsim/errors.h"
#include "support.h"

using namespace bosonsim;

namespace {

OutcomeDistribution two_point(double a) {
    return OutcomeDistribution({{1, 0}, {0, 1}}, {a, 1 - a});
}

}  // namespace

TEST(similarity, examples) {
    auto u = haar_random_unitary(5, 1);
    auto q = exact_distribution(u, {1, 1, 0, 1, 0}, false);
    EXPECT_NEAR(similarity(q, q), 1.0, 1e-12);
    EXPECT_EQ(similarity(two_point(1), two_point(0)), 0.0);
    EXPECT_NEAR(similarity(two_point(0.5), two_point(0.25)), std::sqrt(0.125) + std::sqrt(0.375), 1e-15);
    EXPECT_NEAR(similarity(two_point(0.5), two_point(0.25)), 0.9659, 5e-5);
    EXPECT_THROW(similarity(two_point(0.5), q), ContractError);
}

TEST(tv_distance, examples) {
    auto u = haar_random_unitary(5, 1);
    auto q = exact_distribution(u, {1, 1, 0, 1, 0}, false);
    EXPECT_EQ(tv_distance(q, q), 0.0);
    EXPECT_EQ(tv_distance(two_point(1), two_point(0)), 1.0);
    EXPECT_NEAR(tv_distance(two_point(0.5), two_point(0.25)), 0.25, 1e-15);
    EXPECT_THROW(tv_distance(two_point(0.5), q), ContractError);
}

TEST(similarity, against_oracle) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> unif;
    auto outcomes = enumerate_outcomes(6, 2, true);
    for (int trial = 0; trial < 20; trial++) {
        std::vector<double> p(outcomes.size()), q(outcomes.size());
        for (std::size_t i = 0; i < p.size(); i++) {
            p[i] = unif(rng);
            q[i] = unif(rng) < 0.3 ? 0.0 : unif(rng);
        }
        double sp = std::accumulate(p.begin(), p.end(), 0.0);
        double sq = std::accumulate(q.begin(), q.end(), 0.0);
        for (std::size_t i = 0; i < p.size(); i++) {
            p[i] /= sp;
            q[i] /= sq;
        }
        OutcomeDistribution dp(outcomes, p), dq(outcomes, q);
        // Distribution construction sorts outcomes; rebuild the oracle
        // vectors in that order.
        std::vector<double> ps(dp.probabilities().begin(), dp.probabilities().end());
        std::vector<double> qs(dq.probabilities().begin(), dq.probabilities().end());
        EXPECT_NEAR(similarity(dp, dq), oracle::bhattacharyya(ps, qs), 1e-14);
        EXPECT_NEAR(tv_distance(dp, dq), oracle::total_variation(ps, qs), 1e-14);
    }
}

TEST(empirical_distribution, frequencies) {
    auto support = two_point(0.5);
    std::vector<ModeOccupation> s{{1, 0}, {1, 0}, {0, 1}, {1, 0}};
    auto e = empirical_distribution(s, support);
    EXPECT_EQ(e.probability_of({1, 0}), 0.75);
    EXPECT_EQ(e.probability_of({0, 1}), 0.25);
    std::vector<ModeOccupation> bad{{2, 0}};
    EXPECT_THROW(empirical_distribution(bad, support), ContractError);
    EXPECT_THROW(empirical_distribution({}, support), ContractError);
}

TEST(likelihood_ratio_test, identical_hypotheses) {
    auto u = haar_random_unitary(6, 3);
    HypothesisModel m(u, Hypothesis::indistinguishable, false);
    ModeOccupation in{1, 1, 0, 1, 0, 0};
    std::vector<InputOutputSample> samples;
    for (const auto &o : sample_outputs(m.distribution(in), 200, 1)) {
        samples.push_back({in, o});
    }
    auto r = likelihood_ratio_test(samples, m.oracle(), m.oracle(), 0.1);
    EXPECT_EQ(r.verdict, Verdict::inconclusive);
    EXPECT_EQ(r.samples_used, 200u);
    ASSERT_EQ(r.lr_trajectory.size(), 200u);
    for (double l : r.lr_trajectory) {
        EXPECT_EQ(l, 0.0);
    }
}

TEST(likelihood_ratio_test, decides_for_true_hypothesis) {
    auto u = haar_random_unitary(12, 12);
    HypothesisModel q(u, Hypothesis::indistinguishable, false);
    HypothesisModel p(u, Hypothesis::distinguishable, false);
    auto in = ModeOccupation::parse("101000010000");

    std::vector<InputOutputSample> from_q, from_p;
    for (const auto &o : sample_outputs(q.distribution(in), 500, 21)) {
        from_q.push_back({in, o});
    }
    for (const auto &o : sample_outputs(p.distribution(in), 500, 22)) {
        from_p.push_back({in, o});
    }
    auto rq = likelihood_ratio_test(from_q, q.oracle(), p.oracle(), 5.0);
    auto rp = likelihood_ratio_test(from_p, q.oracle(), p.oracle(), 5.0);
    EXPECT_EQ(rq.verdict, Verdict::indistinguishable);
    EXPECT_EQ(rp.verdict, Verdict::distinguishable);

    // Mean per-sample log ratio under q estimates KL(q||p) > 0. Compare with
    // the exact divergence computed from the two distributions.
    const auto &dq = q.distribution(in);
    const auto &dp = p.distribution(in);
    double kl = 0;
    for (std::size_t i = 0; i < dq.size(); i++) {
        if (dq.probability(i) > 0) {
            kl += dq.probability(i) * std::log(dq.probability(i) / dp.probability(i));
        }
    }
    EXPECT_GT(kl, 0);
    double drift = rq.lr_trajectory.back() / 500;
    EXPECT_NEAR(drift, kl, 0.25);
}

TEST(likelihood_ratio_test, zero_probability_conventions) {
    ModeOccupation in{1, 1};
    ModeOccupation a{1, 1}, b{2, 0};
    auto only_q = [&](const ModeOccupation &, const ModeOccupation &o) { return o == a ? 0.5 : 0.5; };
    auto zero_p = [&](const ModeOccupation &, const ModeOccupation &o) { return o == a ? 0.0 : 0.5; };
    std::vector<InputOutputSample> s{{in, b}, {in, a}, {in, b}};
    auto r = likelihood_ratio_test(s, only_q, zero_p, 1.0);
    EXPECT_EQ(r.lr_trajectory[0], std::log(1.0));
    EXPECT_TRUE(std::isinf(r.lr_trajectory[1]) && r.lr_trajectory[1] > 0);
    EXPECT_EQ(r.verdict, Verdict::indistinguishable);

    auto r2 = likelihood_ratio_test(s, zero_p, only_q, 1.0);
    EXPECT_EQ(r2.verdict, Verdict::distinguishable);

    auto never = [](const ModeOccupation &, const ModeOccupation &) { return 0.0; };
    EXPECT_THROW(likelihood_ratio_test(s, never, never, 1.0), DataError);

    // Once each hypothesis has been ruled out by some sample the data is
    // impossible under both.
    auto zero_q = [&](const ModeOccupation &, const ModeOccupation &o) { return o == b ? 0.0 : 0.5; };
    std::vector<InputOutputSample> both{{in, a}, {in, b}};
    EXPECT_THROW(likelihood_ratio_test(both, zero_q, zero_p, 1.0), DataError);

    EXPECT_THROW(likelihood_ratio_test(s, only_q, zero_p, 0.0), ContractError);
}

TEST(scattershot_aggregate_validation, exact_samples_converge) {
    // Records drawn straight from theory with many samples per group.
    auto u = haar_random_unitary(6, 5);
    std::vector<SampleRecord> recs;
    std::uint64_t pulse = 0;
    for (const char *in : {"110000", "001010", "100001"}) {
        auto input = ModeOccupation::parse(in);
        auto dist = exact_distribution(u, input, false);
        for (const auto &o : sample_outputs(dist, 40000, pulse + 1)) {
            recs.push_back({pulse++, input, input, o});
        }
    }
    auto agg = scattershot_aggregate_validation(recs, u, 5.0);
    ASSERT_EQ(agg.groups.size(), 3u);
    EXPECT_GT(agg.mean_similarity, 0.999);
    EXPECT_LT(agg.mean_distance, 0.02);
    EXPECT_EQ(agg.pooled.verdict, Verdict::indistinguishable);
    EXPECT_EQ(agg.pooled.samples_used, recs.size());
    EXPECT_EQ(agg.pooled.similarity.value(), agg.mean_similarity);
    EXPECT_NEAR(agg.pooled_similarity,
                (agg.groups[0].similarity + agg.groups[1].similarity + agg.groups[2].similarity) / 3, 1e-12);
}

TEST(scattershot_aggregate_validation, covers_all_groups) {
    auto u = haar_random_unitary(12, 12);
    std::vector<SourceParams> src(12, SourceParams{0.4});
    auto run = scattershot_run(u, src, 100000, 3, 2);
    auto agg = scattershot_aggregate_validation(run.records, u, 5.0);
    EXPECT_EQ(agg.groups.size(), 220u);
}

TEST(scattershot_aggregate_validation, distance_follows_noise_law) {
    // Expected TVD between a multinomial sample of size s and its source
    // scales like sqrt(support / s); quadrupling s should halve it.
    auto u = haar_random_unitary(8, 6);
    auto input = ModeOccupation::parse("11010000");
    auto dist = exact_distribution(u, input, false);
    auto mean_distance = [&](std::uint64_t s) {
        double acc = 0;
        const int reps = 40;
        for (int r = 0; r < reps; r++) {
            std::vector<SampleRecord> recs;
            std::uint64_t pulse = 0;
            for (const auto &o : sample_outputs(dist, s, 1000 * s + r)) {
                recs.push_back({pulse++, input, input, o});
            }
            acc += scattershot_aggregate_validation(recs, u, 5.0).mean_distance;
        }
        return acc / reps;
    };
    double d1 = mean_distance(500);
    double d4 = mean_distance(2000);
    EXPECT_NEAR(d1 / d4, 2.0, 0.2);
    // Leading-order value: sum_i sqrt(p_i (1 - p_i) / (2 pi s)).
    double predicted = 0;
    for (double p : dist.probabilities()) {
        predicted += std::sqrt(p * (1 - p) / (2 * M_PI * 500));
    }
    EXPECT_NEAR(d1 / predicted, 1.0, 0.1);
}

TEST(scattershot_aggregate_validation, rejects_bad_records) {
    auto u = haar_random_unitary(4, 1);
    EXPECT_THROW(scattershot_aggregate_validation({}, u, 1.0), ContractError);
    std::vector<SampleRecord> lossy{{0, {1, 1, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}}};
    EXPECT_THROW(scattershot_aggregate_validation(lossy, u, 1.0), ContractError);
}

TEST(scattershot_aggregate_validation, no_collision_analysis_skips_bunched_outputs) {
    auto u = haar_random_unitary(4, 2);
    auto in = ModeOccupation::parse("1100");
    std::vector<SampleRecord> recs{
        {0, in, in, ModeOccupation::parse("1010")},
        {1, in, in, ModeOccupation::parse("2000")},
        {2, in, in, ModeOccupation::parse("0101")},
    };
    auto agg = scattershot_aggregate_validation(recs, u, 1.0);
    EXPECT_EQ(agg.skipped_collisions, 1u);
    EXPECT_EQ(agg.pooled.samples_used, 2u);

    auto full = scattershot_aggregate_validation(recs, u, 1.0, Hypothesis::distinguishable, true);
    EXPECT_EQ(full.skipped_collisions, 0u);
    EXPECT_EQ(full.pooled.samples_used, 3u);

    std::vector<SampleRecord> bunched{{0, in, in, ModeOccupation::parse("0200")}};
    EXPECT_THROW(scattershot_aggregate_validation(bunched, u, 1.0), ContractError);
}
