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

#ifndef BOSONSIM_SAMPLING_H
#define BOSONSIM_SAMPLING_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bosonsim/linalg.h"
#include "bosonsim/rng.h"
#include "bosonsim/sources.h"

namespace bosonsim {

inline constexpr unsigned kMaxExactPhotons = 6;
inline constexpr std::uint64_t kMaxEnumeratedOutcomes = 1'000'000;

/// Probability over Fock outcomes, stored sorted by occupation.
class OutcomeDistribution {
   public:
    OutcomeDistribution() = default;
    /// Sorts the outcomes. Throws ContractError on duplicates, negative
    /// entries or a total that is off from 1 by more than 1e-9.
    OutcomeDistribution(std::vector<ModeOccupation> outcomes, std::vector<double> probabilities);

    std::size_t size() const { return outcomes_.size(); }
    std::size_t modes() const { return outcomes_.empty() ? 0 : outcomes_.front().modes(); }
    std::span<const ModeOccupation> outcomes() const { return outcomes_; }
    std::span<const double> probabilities() const { return probabilities_; }
    const ModeOccupation &outcome(std::size_t i) const { return outcomes_[i]; }
    double probability(std::size_t i) const { return probabilities_[i]; }

    /// Index of an outcome, if it belongs to the outcome set.
    std::optional<std::size_t> index_of(const ModeOccupation &outcome) const;
    /// Probability of an outcome; zero when it is outside the outcome set.
    double probability_of(const ModeOccupation &outcome) const;

    bool same_outcome_set(const OutcomeDistribution &other) const { return outcomes_ == other.outcomes_; }

   private:
    std::vector<ModeOccupation> outcomes_;
    std::vector<double> probabilities_;
};

enum class Hypothesis { indistinguishable, distinguishable };

/// n-photon outcomes on m modes in lexicographic order; only 0/1 patterns
/// when `collisions` is false.
std::vector<ModeOccupation> enumerate_outcomes(std::size_t modes, unsigned photons, bool collisions);

std::uint64_t binomial_coefficient(std::uint64_t n, std::uint64_t k);

/// Indistinguishable photons: p(T|S) = |Perm(U_{S,T})|^2 / (prod s! prod t!).
/// With `collisions` false the distribution is renormalized over the
/// collision-free outputs. Refuses n > 6 or more than 10^6 outcomes.
OutcomeDistribution exact_distribution(const ComplexMatrix &u, const ModeOccupation &input, bool collisions);

/// Fully distinguishable photons: p(T|S) = Perm(|U|^2_{S,T}) / prod t!.
OutcomeDistribution distinguishable_distribution(const ComplexMatrix &u, const ModeOccupation &input, bool collisions);

OutcomeDistribution hypothesis_distribution(
    const ComplexMatrix &u, const ModeOccupation &input, bool collisions, Hypothesis hypothesis);

/// Inverse-CDF sampler over an OutcomeDistribution.
class OutcomeSampler {
   public:
    explicit OutcomeSampler(OutcomeDistribution dist);
    const OutcomeDistribution &distribution() const { return dist_; }
    std::size_t sample_index(Rng &rng) const;
    const ModeOccupation &sample(Rng &rng) const { return dist_.outcome(sample_index(rng)); }

   private:
    OutcomeDistribution dist_;
    std::vector<double> cdf_;
};

std::vector<ModeOccupation> sample_outputs(const OutcomeDistribution &dist, std::uint64_t shots, std::uint64_t seed);

/// One sampled event.
struct SampleRecord {
    std::uint64_t pulse_index = 0;
    ModeOccupation trigger_pattern;  ///< over the k sources
    ModeOccupation input_pattern;    ///< over the m interferometer modes
    ModeOccupation output_pattern;   ///< detected photons over the m modes

    auto operator<=>(const SampleRecord &) const = default;
    bool operator==(const SampleRecord &) const = default;
};

/// Standard boson sampling: `shots` draws for one fixed input. Records use
/// the input as trigger pattern and the shot number as pulse index.
std::vector<SampleRecord> standard_sampling_run(
    const ComplexMatrix &u,
    const ModeOccupation &input,
    std::uint64_t shots,
    Hypothesis hypothesis,
    bool collisions,
    std::uint64_t seed);

/// Closed-form n-fold rate. Standard: rep_rate (eps eta)^n. Scattershot:
/// rep_rate C(k, n) (eps eta)^n (1 - eps eta)^(k - n), the probability
/// that exactly n of k sources herald.
double expected_rate(unsigned k, unsigned n, double eps, double eta, double rep_rate, bool scattershot);

struct RateReport {
    unsigned n = 0;
    std::uint64_t pulses = 0;
    /// Pulses in which exactly n sources heralded.
    std::uint64_t herald_events = 0;
    double herald_rate_hz = 0.0;
    double predicted_herald_rate_hz = 0.0;
    /// Herald events in which all n photons were detected at the output.
    std::uint64_t retained_events = 0;
    double rate_hz = 0.0;
    /// Prediction for retained events from the per-source probabilities.
    double predicted_rate_hz = 0.0;
    std::uint64_t distinct_trigger_patterns = 0;
    /// Pulse count per number of heralding sources, 0..k.
    std::vector<std::uint64_t> herald_histogram;
};

struct ScattershotResult {
    std::vector<SampleRecord> records;  ///< retained events, by pulse index
    RateReport report;
};

/// Scattershot protocol with one source per input mode. Per pulse the
/// heralded sources whose signal survived form the input, the output is
/// drawn from the exact distribution, every output photon is detected with
/// the mean source eta_detect, and the event is kept when exactly n_select
/// sources heralded and n_select photons were detected.
///
/// Pulses are processed in fixed-size batches seeded from (seed, batch), so
/// the result is identical for every thread count.
ScattershotResult scattershot_run(
    const ComplexMatrix &u,
    std::span<const SourceParams> sources,
    std::uint64_t pulses,
    unsigned n_select,
    std::uint64_t seed,
    unsigned threads = 1);

}  // namespace bosonsim

#endif
