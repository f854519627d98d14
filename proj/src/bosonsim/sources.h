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

#ifndef BOSONSIM_SOURCES_H
#define BOSONSIM_SOURCES_H

#include <cstdint>
#include <span>
#include <vector>

#include "bosonsim/linalg.h"
#include "bosonsim/rng.h"

namespace bosonsim {

/// One heralded SPDC pair source.
struct SourceParams {
    double epsilon = 0.0;     ///< pair-generation probability per pulse
    double eta_herald = 1.0;  ///< heralding efficiency
    double eta_detect = 1.0;  ///< detector efficiency
    double indistinguishability = 1.0;
    double rep_rate = 80e6;  ///< pulses per second

    /// Throws ContractError unless every probability is in [0, 1] and
    /// rep_rate > 0.
    void validate() const;

    /// Probability that a pulse produces a detected idler.
    double herald_probability() const { return epsilon * eta_herald * eta_detect; }

    bool operator==(const SourceParams &) const = default;
};

/// Two-photon joint spectral amplitude sampled on a uniform square grid.
/// Rows index the signal detuning, columns the idler detuning.
struct JointSpectrum {
    ComplexMatrix grid;
    double nu_step = 0.0;
    /// Set when the grid span does not cover four standard deviations of the
    /// joint intensity along either axis.
    bool truncated = false;
};

/// Gaussian model of the joint amplitude: pump envelope
/// exp(-(ws + wi)^2 / (4 sigma_pump^2)) times phase-matching envelope
/// exp(-(ws cos(angle) + wi sin(angle))^2 / (4 sigma_pm^2)), sampled on
/// [-span, span]^2 and normalized so that sum |f|^2 dnu^2 = 1.
///
/// At angle = -pi/4 the amplitude factorizes when sigma_pump = sqrt(2) sigma_pm.
JointSpectrum gaussian_jsa(
    double sigma_pump, double sigma_pm, double correlation_angle, std::size_t grid_size, double span);

/// Schmidt purity sum(l_i^2) with l_i = s_i^2 / sum(s^2) from the singular
/// values of the amplitude grid.
double schmidt_purity(const ComplexMatrix &amplitudes);
double schmidt_purity(const JointSpectrum &jsa);

/// HOM visibility expected between two identical independent heralded
/// photons. Equal to the heralded photon's spectral purity.
double predicted_visibility(const JointSpectrum &jsa);

/// Finds the correlation angle in [-pi/4, 0] at which the Gaussian model
/// reaches `target_purity`, by bisection to `angle_tol`. The purity must be
/// bracketed by the two ends of the interval or ContractError is thrown.
double fit_correlation_angle(
    double target_purity,
    double sigma_pump,
    double sigma_pm,
    std::size_t grid_size,
    double span,
    double angle_tol = 1e-10);

/// Normalized HOM coincidence probability 1/2 (1 - V exp(-sigma^2 tau^2)).
double hom_dip(double visibility, double sigma, double tau);

/// What happened to one source in one pulse.
struct SourceOutcome {
    bool fired = false;           ///< a pair was created
    bool heralded = false;        ///< the idler was detected
    bool signal_present = false;  ///< the signal survived into the interferometer

    bool operator==(const SourceOutcome &) const = default;
};

/// Simulates one pulse on every source. A pair is created with probability
/// epsilon; given a pair, the idler is detected with probability
/// eta_herald * eta_detect and, independently, the signal survives with
/// probability eta_herald. At most one pair per source and pulse.
std::vector<SourceOutcome> fire_sources(std::span<const SourceParams> params, Rng &rng);
std::vector<SourceOutcome> fire_sources(std::span<const SourceParams> params, std::uint64_t seed);

/// Same draws as fire_sources, written into `out` without allocating.
void fire_sources_into(std::span<const SourceParams> params, Rng &rng, std::span<SourceOutcome> out);

}  // namespace bosonsim

#endif
