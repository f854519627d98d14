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

#ifndef BOSONSIM_VALIDATION_H
#define BOSONSIM_VALIDATION_H

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "bosonsim/linalg.h"
#include "bosonsim/sampling.h"

namespace bosonsim {

enum class Verdict { indistinguishable, distinguishable, inconclusive };

const char *verdict_name(Verdict v);

struct ValidationReport {
    std::optional<double> similarity;
    std::optional<double> distance;
    /// Cumulative ln(q/p) after each sample. Entries become +-inf once a
    /// sample is impossible under one hypothesis only.
    std::vector<double> lr_trajectory;
    Verdict verdict = Verdict::inconclusive;
    std::uint64_t samples_used = 0;
};

/// Bhattacharyya coefficient sum sqrt(p_i q_i). Both distributions must be
/// over the same outcome set.
double similarity(const OutcomeDistribution &p, const OutcomeDistribution &q);

/// Total variation distance (1/2) sum |p_i - q_i|.
double tv_distance(const OutcomeDistribution &p, const OutcomeDistribution &q);

/// Plug-in frequencies of `samples` over the outcome set of `support`.
/// Throws ContractError if a sample lies outside that set.
OutcomeDistribution empirical_distribution(std::span<const ModeOccupation> samples, const OutcomeDistribution &support);

/// Probability of `output` given `input` under one hypothesis.
using ProbabilityOracle = std::function<double(const ModeOccupation &input, const ModeOccupation &output)>;

/// Exact per-input hypothesis model with a thread-safe memo of the
/// distributions it has built.
class HypothesisModel {
   public:
    HypothesisModel(ComplexMatrix u, Hypothesis hypothesis, bool collisions);

    const OutcomeDistribution &distribution(const ModeOccupation &input) const;
    double probability(const ModeOccupation &input, const ModeOccupation &output) const;
    ProbabilityOracle oracle() const;

    const ComplexMatrix &unitary() const { return u_; }
    Hypothesis hypothesis() const { return hypothesis_; }
    bool collisions() const { return collisions_; }

   private:
    ComplexMatrix u_;
    Hypothesis hypothesis_;
    bool collisions_;
    mutable std::mutex mu_;
    mutable std::map<ModeOccupation, std::unique_ptr<const OutcomeDistribution>> memo_;
};

struct InputOutputSample {
    ModeOccupation input;
    ModeOccupation output;
};

/// Cumulative log-likelihood ratio ln(q/p) with q the indistinguishable and
/// p the alternative hypothesis. Verdict indistinguishable if the final
/// value exceeds `threshold`, distinguishable if it is below -threshold.
/// Throws DataError on a sample impossible under both hypotheses.
ValidationReport likelihood_ratio_test(
    std::span<const InputOutputSample> samples,
    const ProbabilityOracle &q_model,
    const ProbabilityOracle &p_model,
    double threshold);

/// Validation of one trigger group.
struct GroupValidation {
    ModeOccupation input;
    std::uint64_t samples = 0;
    double similarity = 0.0;
    double distance = 0.0;
};

struct AggregateValidation {
    std::vector<GroupValidation> groups;  ///< sorted by input pattern
    double mean_similarity = 0.0;
    double sd_similarity = 0.0;  ///< sample standard deviation over groups
    double mean_distance = 0.0;
    double sd_distance = 0.0;
    /// Similarity and distance of the joint (input, output) frequencies
    /// against the frequency-weighted theory.
    double pooled_similarity = 0.0;
    double pooled_distance = 0.0;
    ValidationReport pooled;  ///< LR test over the used records, in pulse order
    std::uint64_t skipped_collisions = 0;
};

/// Groups post-selected records by input pattern, compares each group with
/// the exact distribution for that input and runs a pooled LR test against
/// `alternative`. Invariant under record order.
///
/// With collisions == false, records whose output has two or more photons
/// in one mode are left out, as a no-collision analysis would.
AggregateValidation scattershot_aggregate_validation(
    std::span<const SampleRecord> records,
    const ComplexMatrix &u,
    double threshold,
    Hypothesis alternative = Hypothesis::distinguishable,
    bool collisions = false);

}  // namespace bosonsim

#endif
