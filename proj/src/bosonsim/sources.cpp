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

#include "bosonsim/sources.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bosonsim/errors.h"

namespace bosonsim {

namespace {

bool is_probability(double p) {
    return p >= 0.0 && p <= 1.0;
}

}  // namespace

void SourceParams::validate() const {
    if (!is_probability(epsilon) || !is_probability(eta_herald) || !is_probability(eta_detect) ||
        !is_probability(indistinguishability)) {
        throw ContractError("source parameters: probabilities must lie in [0, 1]");
    }
    if (!(rep_rate > 0.0) || !std::isfinite(rep_rate)) {
        throw ContractError("source parameters: rep_rate must be positive");
    }
}

JointSpectrum gaussian_jsa(
    double sigma_pump, double sigma_pm, double correlation_angle, std::size_t grid_size, double span) {
    if (!(sigma_pump > 0) || !(sigma_pm > 0) || !(span > 0)) {
        throw ContractError("gaussian_jsa: sigma_pump, sigma_pm and span must be positive");
    }
    if (grid_size < 16) {
        throw ContractError("gaussian_jsa: grid_size must be at least 16");
    }
    JointSpectrum jsa;
    jsa.nu_step = 2.0 * span / static_cast<double>(grid_size - 1);
    jsa.grid = ComplexMatrix(grid_size, grid_size);

    double c = std::cos(correlation_angle);
    double s = std::sin(correlation_angle);

    // The intensity is exp(-2 (a x^2 + b y^2 + 2 g x y)); its marginal
    // standard deviations follow from the inverse of the quadratic form.
    double p = 1.0 / (4 * sigma_pump * sigma_pump);
    double q = 1.0 / (4 * sigma_pm * sigma_pm);
    double a = p + q * c * c;
    double b = p + q * s * s;
    double g = p + q * c * s;
    double det = a * b - g * g;
    double width = det > 0 ? std::sqrt(std::max(a, b) / (4 * det)) : std::numeric_limits<double>::infinity();
    jsa.truncated = span < 4.0 * width;
    double norm2 = 0;
    for (std::size_t r = 0; r < grid_size; r++) {
        double ws = -span + jsa.nu_step * static_cast<double>(r);
        for (std::size_t k = 0; k < grid_size; k++) {
            double wi = -span + jsa.nu_step * static_cast<double>(k);
            double pump = (ws + wi) * (ws + wi) / (4 * sigma_pump * sigma_pump);
            double pm = (ws * c + wi * s) * (ws * c + wi * s) / (4 * sigma_pm * sigma_pm);
            double f = std::exp(-(pump + pm));
            jsa.grid(r, k) = f;
            norm2 += f * f;
        }
    }
    if (!(norm2 > 0)) {
        throw ContractError("gaussian_jsa: amplitude vanishes on the grid");
    }
    jsa.grid *= 1.0 / (std::sqrt(norm2) * jsa.nu_step);
    return jsa;
}

double schmidt_purity(const ComplexMatrix &amplitudes) {
    auto sigma = svd_singular_values(amplitudes);
    double sum2 = 0;
    double sum4 = 0;
    for (double s : sigma) {
        double s2 = s * s;
        sum2 += s2;
        sum4 += s2 * s2;
    }
    if (!(sum2 > 0)) {
        throw ContractError("schmidt_purity: amplitude grid is identically zero");
    }
    return sum4 / (sum2 * sum2);
}

double schmidt_purity(const JointSpectrum &jsa) {
    return schmidt_purity(jsa.grid);
}

double predicted_visibility(const JointSpectrum &jsa) {
    return schmidt_purity(jsa);
}

double fit_correlation_angle(
    double target_purity, double sigma_pump, double sigma_pm, std::size_t grid_size, double span, double angle_tol) {
    if (!(target_purity > 0) || target_purity > 1) {
        throw ContractError("fit_correlation_angle: target purity must be in (0, 1]");
    }
    auto purity_at = [&](double angle) {
        return schmidt_purity(gaussian_jsa(sigma_pump, sigma_pm, angle, grid_size, span));
    };
    double lo = -std::numbers::pi / 4;
    double hi = 0.0;
    double p_lo = purity_at(lo);
    double p_hi = purity_at(hi);
    if (!(p_lo >= target_purity && target_purity >= p_hi)) {
        throw ContractError(
            "fit_correlation_angle: target purity " + std::to_string(target_purity) + " is not bracketed by [" +
            std::to_string(p_hi) + ", " + std::to_string(p_lo) + "]");
    }
    while (hi - lo > angle_tol) {
        double mid = 0.5 * (lo + hi);
        if (purity_at(mid) >= target_purity) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double hom_dip(double visibility, double sigma, double tau) {
    if (!is_probability(visibility)) {
        throw ContractError("hom_dip: visibility must lie in [0, 1]");
    }
    if (!(sigma > 0)) {
        throw ContractError("hom_dip: sigma must be positive");
    }
    return 0.5 * (1.0 - visibility * std::exp(-sigma * sigma * tau * tau));
}

void fire_sources_into(std::span<const SourceParams> params, Rng &rng, std::span<SourceOutcome> out) {
    for (std::size_t i = 0; i < params.size(); i++) {
        const auto &p = params[i];
        SourceOutcome o;
        o.fired = uniform01(rng) < p.epsilon;
        if (o.fired) {
            o.heralded = uniform01(rng) < p.eta_herald * p.eta_detect;
            o.signal_present = uniform01(rng) < p.eta_herald;
        }
        out[i] = o;
    }
}

std::vector<SourceOutcome> fire_sources(std::span<const SourceParams> params, Rng &rng) {
    if (params.empty()) {
        throw ContractError("fire_sources: no sources given");
    }
    for (const auto &p : params) {
        p.validate();
    }
    std::vector<SourceOutcome> out(params.size());
    fire_sources_into(params, rng, out);
    return out;
}

std::vector<SourceOutcome> fire_sources(std::span<const SourceParams> params, std::uint64_t seed) {
    auto rng = make_rng(seed, "fire-sources");
    return fire_sources(params, rng);
}

}  // namespace bosonsim
