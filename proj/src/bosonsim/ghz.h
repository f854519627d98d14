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

#ifndef BOSONSIM_GHZ_H
#define BOSONSIM_GHZ_H

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace bosonsim {

inline constexpr unsigned kMaxGhzPhotons = 20;

/// Noisy N-photon GHZ state: weight P on |H..H><H..H| + |V..V><V..V| split
/// evenly, 1 - P spread uniformly over the other diagonal elements, and a
/// real GHZ coherence C/2 between the two extremal states.
struct GhzModel {
    unsigned n_photons = 12;
    double population = 1.0;
    double coherence = 1.0;

    /// Throws ContractError unless 2 <= N <= 20 and 0 <= C <= P <= 1.
    void validate() const;
};

enum class BasisKind { hv, theta };

struct MeasurementBasis {
    BasisKind kind = BasisKind::hv;
    double theta = 0.0;  ///< only meaningful for BasisKind::theta

    static MeasurementBasis hv() { return {BasisKind::hv, 0.0}; }
    static MeasurementBasis equatorial(double theta) { return {BasisKind::theta, theta}; }
    /// "HV" or "theta=<value>".
    std::string label() const;
};

/// Outcomes are N-bit masks. Bit i set means photon i was found V (H/V
/// basis) or in the -1 eigenstate (equatorial basis).
struct BasisCounts {
    MeasurementBasis basis;
    unsigned n_photons = 0;
    std::map<std::uint64_t, std::uint64_t> counts;

    std::uint64_t total() const;
    /// "HHV..." or "++-..." with photon 0 first.
    std::string outcome_string(std::uint64_t outcome) const;
};

/// Value with its one-sigma uncertainty.
struct Estimate {
    double value = 0.0;
    double sigma = 0.0;
};

struct WitnessResult {
    double fidelity = 0.0;
    double sigma = 0.0;
    bool genuine = false;
    /// (F - 1/2) / sigma; +inf when sigma is zero and F > 1/2.
    double significance = 0.0;
};

/// Probability of every H/V outcome, indexed by outcome mask.
std::vector<double> hv_outcome_distribution(const GhzModel &model);

/// Probability of every outcome in the (|H> +- e^{i theta}|V>)/sqrt(2)
/// basis: [1 + parity(b) C cos(N theta)] / 2^N.
std::vector<double> theta_outcome_distribution(const GhzModel &model, double theta);

/// Exact <M_theta^{(x)N}> = C cos(N theta).
double theta_expectation(const GhzModel &model, double theta);

/// Summed weight on the all-H and all-V outcomes of an H/V distribution.
double extremal_population(std::span<const double> hv_distribution);

/// Parity expectation sum_b (prod b_i) p(b) of an equatorial distribution.
double parity_expectation(std::span<const double> theta_distribution);

/// The N equatorial settings theta_k = k pi / N.
std::vector<double> coherence_settings(unsigned n_photons);

/// Multinomial draw of `shots` outcomes in the given basis.
BasisCounts simulate_counts(const GhzModel &model, const MeasurementBasis &basis, std::uint64_t shots, std::uint64_t seed);

/// P = (n(all H) + n(all V)) / total with a binomial sigma.
Estimate estimate_population(const BasisCounts &counts);

/// Parity expectation of one equatorial setting with its binomial sigma.
Estimate estimate_parity(const BasisCounts &counts);

/// C = (1/N) sum_k (-1)^k <M_k>, from exactly the N settings k pi / N in
/// any order. Setting errors are combined in quadrature.
Estimate estimate_coherence(std::span<const BasisCounts> settings);

/// F = (P + C)/2 with sigma_F = sqrt(sigma_P^2 + sigma_C^2)/2. Genuine
/// N-partite entanglement iff F > 1/2 strictly.
WitnessResult fidelity_and_witness(const Estimate &population, const Estimate &coherence);

/// Full simulated experiment: one H/V run plus N equatorial runs, each
/// seeded from (seed, setting index).
struct GhzRun {
    GhzModel model;
    BasisCounts hv;
    std::vector<BasisCounts> equatorial;
    Estimate population;
    Estimate coherence;
    WitnessResult witness;
};

GhzRun run_ghz_experiment(const GhzModel &model, std::uint64_t shots_per_setting, std::uint64_t seed);

}  // namespace bosonsim

#endif
