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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bosonsim/errors.h"

namespace bosonsim {

namespace {

void require_same_outcomes(const OutcomeDistribution &p, const OutcomeDistribution &q, const char *who) {
    if (!p.same_outcome_set(q)) {
        throw ContractError(std::string(who) + ": distributions are over different outcome sets");
    }
}

double mean_of(const std::vector<double> &xs) {
    double s = 0;
    for (double x : xs) {
        s += x;
    }
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

double sample_sd(const std::vector<double> &xs, double mean) {
    if (xs.size() < 2) {
        return 0.0;
    }
    double s = 0;
    for (double x : xs) {
        s += (x - mean) * (x - mean);
    }
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

}  // namespace

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::indistinguishable:
            return "indistinguishable";
        case Verdict::distinguishable:
            return "distinguishable";
        case Verdict::inconclusive:
            break;
    }
    return "inconclusive";
}

double similarity(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    require_same_outcomes(p, q, "similarity");
    double s = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        s += std::sqrt(p.probability(i) * q.probability(i));
    }
    return std::clamp(s, 0.0, 1.0);
}

double tv_distance(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    require_same_outcomes(p, q, "tv_distance");
    double d = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        d += std::abs(p.probability(i) - q.probability(i));
    }
    return std::clamp(0.5 * d, 0.0, 1.0);
}

OutcomeDistribution empirical_distribution(std::span<const ModeOccupation> samples, const OutcomeDistribution &support) {
    if (samples.empty()) {
        throw ContractError("empirical_distribution: no samples");
    }
    std::vector<double> counts(support.size(), 0.0);
    for (const auto &s : samples) {
        auto i = support.index_of(s);
        if (!i) {
            throw ContractError("empirical_distribution: sample " + s.str() + " is outside the outcome set");
        }
        counts[*i] += 1;
    }
    double n = static_cast<double>(samples.size());
    for (auto &c : counts) {
        c /= n;
    }
    return OutcomeDistribution(
        std::vector<ModeOccupation>(support.outcomes().begin(), support.outcomes().end()), std::move(counts));
}

HypothesisModel::HypothesisModel(ComplexMatrix u, Hypothesis hypothesis, bool collisions)
    : u_(std::move(u)), hypothesis_(hypothesis), collisions_(collisions) {}

const OutcomeDistribution &HypothesisModel::distribution(const ModeOccupation &input) const {
    std::lock_guard lock(mu_);
    auto it = memo_.find(input);
    if (it == memo_.end()) {
        auto dist = std::make_unique<const OutcomeDistribution>(
            hypothesis_distribution(u_, input, collisions_, hypothesis_));
        it = memo_.emplace(input, std::move(dist)).first;
    }
    return *it->second;
}

double HypothesisModel::probability(const ModeOccupation &input, const ModeOccupation &output) const {
    return distribution(input).probability_of(output);
}

ProbabilityOracle HypothesisModel::oracle() const {
    return [this](const ModeOccupation &in, const ModeOccupation &out) { return probability(in, out); };
}

ValidationReport likelihood_ratio_test(
    std::span<const InputOutputSample> samples,
    const ProbabilityOracle &q_model,
    const ProbabilityOracle &p_model,
    double threshold) {
    if (!(threshold > 0)) {
        throw ContractError("likelihood_ratio_test: threshold must be positive");
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    ValidationReport report;
    report.lr_trajectory.reserve(samples.size());
    double log_ratio = 0;
    for (std::size_t t = 0; t < samples.size(); t++) {
        const auto &s = samples[t];
        double q = q_model(s.input, s.output);
        double p = p_model(s.input, s.output);
        if (q <= 0 && p <= 0) {
            throw DataError(
                "likelihood_ratio_test: sample " + std::to_string(t) + " (" + s.input.str() + " -> " + s.output.str() +
                ") is impossible under both hypotheses");
        }
        double step = q <= 0 ? -inf : p <= 0 ? inf : std::log(q) - std::log(p);
        if (std::isinf(log_ratio) && std::isinf(step) && (log_ratio > 0) != (step > 0)) {
            throw DataError("likelihood_ratio_test: the data has zero likelihood under both hypotheses");
        }
        log_ratio += step;
        report.lr_trajectory.push_back(log_ratio);
    }
    report.samples_used = samples.size();
    if (log_ratio > threshold) {
        report.verdict = Verdict::indistinguishable;
    } else if (log_ratio < -threshold) {
        report.verdict = Verdict::distinguishable;
    }
    return report;
}

AggregateValidation scattershot_aggregate_validation(
    std::span<const SampleRecord> records,
    const ComplexMatrix &u,
    double threshold,
    Hypothesis alternative,
    bool collisions) {
    if (records.empty()) {
        throw ContractError("scattershot_aggregate_validation: no records");
    }
    std::vector<SampleRecord> ordered;
    ordered.reserve(records.size());
    std::uint64_t skipped = 0;
    for (const auto &r : records) {
        if (!collisions && !r.output_pattern.collision_free()) {
            skipped++;
        } else {
            ordered.push_back(r);
        }
    }
    if (ordered.empty()) {
        throw ContractError("scattershot_aggregate_validation: every record has an output collision");
    }
    std::sort(ordered.begin(), ordered.end());

    std::map<ModeOccupation, std::vector<ModeOccupation>> groups;
    for (const auto &r : ordered) {
        if (r.output_pattern.photons() != r.trigger_pattern.photons() ||
            r.input_pattern.photons() != r.trigger_pattern.photons()) {
            throw ContractError(
                "scattershot_aggregate_validation: record at pulse " + std::to_string(r.pulse_index) +
                " is not post-selected");
        }
        groups[r.input_pattern].push_back(r.output_pattern);
    }

    HypothesisModel theory(u, Hypothesis::indistinguishable, collisions);
    HypothesisModel alt(u, alternative, collisions);

    AggregateValidation agg;
    agg.skipped_collisions = skipped;
    std::vector<double> sims, dists;
    double total = static_cast<double>(ordered.size());
    for (const auto &[input, outputs] : groups) {
        const auto &q = theory.distribution(input);
        auto p = empirical_distribution(outputs, q);
        GroupValidation g{input, outputs.size(), similarity(p, q), tv_distance(p, q)};
        double weight = static_cast<double>(outputs.size()) / total;
        agg.pooled_similarity += weight * g.similarity;
        agg.pooled_distance += weight * g.distance;
        sims.push_back(g.similarity);
        dists.push_back(g.distance);
        agg.groups.push_back(std::move(g));
    }
    agg.mean_similarity = mean_of(sims);
    agg.sd_similarity = sample_sd(sims, agg.mean_similarity);
    agg.mean_distance = mean_of(dists);
    agg.sd_distance = sample_sd(dists, agg.mean_distance);

    std::vector<InputOutputSample> samples;
    samples.reserve(ordered.size());
    for (const auto &r : ordered) {
        samples.push_back({r.input_pattern, r.output_pattern});
    }
    agg.pooled = likelihood_ratio_test(samples, theory.oracle(), alt.oracle(), threshold);
    agg.pooled.similarity = agg.mean_similarity;
    agg.pooled.distance = agg.mean_distance;
    return agg;
}

}  // namespace bosonsim
