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

#include "bosonsim/ghz.h"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "bosonsim/errors.h"
#include "bosonsim/rng.h"

namespace bosonsim {

namespace {

std::uint64_t outcome_count(unsigned n) {
    return std::uint64_t{1} << n;
}

bool odd_parity(std::uint64_t outcome) {
    return (std::popcount(outcome) & 1) != 0;
}

}  // namespace

void GhzModel::validate() const {
    if (n_photons < 2 || n_photons > kMaxGhzPhotons) {
        throw ContractError("GHZ model: photon number must be in [2, " + std::to_string(kMaxGhzPhotons) + "]");
    }
    if (!(coherence >= 0.0 && coherence <= population && population <= 1.0)) {
        throw ContractError("GHZ model: requires 0 <= C <= P <= 1");
    }
}

std::string MeasurementBasis::label() const {
    if (kind == BasisKind::hv) {
        return "HV";
    }
    std::ostringstream out;
    out.precision(17);
    out << "theta=" << theta;
    return out.str();
}

std::uint64_t BasisCounts::total() const {
    std::uint64_t t = 0;
    for (const auto &[outcome, count] : counts) {
        t += count;
    }
    return t;
}

std::string BasisCounts::outcome_string(std::uint64_t outcome) const {
    char zero = basis.kind == BasisKind::hv ? 'H' : '+';
    char one = basis.kind == BasisKind::hv ? 'V' : '-';
    std::string s(n_photons, zero);
    for (unsigned i = 0; i < n_photons; i++) {
        if (outcome >> i & 1) {
            s[i] = one;
        }
    }
    return s;
}

std::vector<double> hv_outcome_distribution(const GhzModel &model) {
    model.validate();
    std::uint64_t size = outcome_count(model.n_photons);
    std::vector<double> p(size, (1.0 - model.population) / static_cast<double>(size - 2));
    p.front() = model.population / 2;
    p.back() = model.population / 2;
    return p;
}

std::vector<double> theta_outcome_distribution(const GhzModel &model, double theta) {
    model.validate();
    std::uint64_t size = outcome_count(model.n_photons);
    double m = theta_expectation(model, theta);
    double inv = 1.0 / static_cast<double>(size);
    std::vector<double> p(size);
    for (std::uint64_t b = 0; b < size; b++) {
        p[b] = (1.0 + (odd_parity(b) ? -m : m)) * inv;
    }
    return p;
}

double theta_expectation(const GhzModel &model, double theta) {
    model.validate();
    return model.coherence * std::cos(static_cast<double>(model.n_photons) * theta);
}

double extremal_population(std::span<const double> hv_distribution) {
    if (hv_distribution.size() < 4) {
        throw ContractError("extremal_population: need a distribution over at least two photons");
    }
    return hv_distribution.front() + hv_distribution.back();
}

double parity_expectation(std::span<const double> theta_distribution) {
    double m = 0;
    for (std::uint64_t b = 0; b < theta_distribution.size(); b++) {
        m += odd_parity(b) ? -theta_distribution[b] : theta_distribution[b];
    }
    return m;
}

std::vector<double> coherence_settings(unsigned n_photons) {
    std::vector<double> thetas(n_photons);
    for (unsigned k = 0; k < n_photons; k++) {
        thetas[k] = static_cast<double>(k) * std::numbers::pi / static_cast<double>(n_photons);
    }
    return thetas;
}

BasisCounts simulate_counts(
    const GhzModel &model, const MeasurementBasis &basis, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw ContractError("simulate_counts: shots must be at least 1");
    }
    auto probs = basis.kind == BasisKind::hv ? hv_outcome_distribution(model)
                                             : theta_outcome_distribution(model, basis.theta);
    std::discrete_distribution<std::uint64_t> pick(probs.begin(), probs.end());
    auto rng = make_rng(seed, "ghz-counts");
    BasisCounts out{basis, model.n_photons, {}};
    for (std::uint64_t s = 0; s < shots; s++) {
        out.counts[pick(rng)]++;
    }
    return out;
}

Estimate estimate_population(const BasisCounts &counts) {
    if (counts.basis.kind != BasisKind::hv) {
        throw ContractError("estimate_population: counts are not in the H/V basis");
    }
    std::uint64_t total = counts.total();
    if (total == 0) {
        throw ContractError("estimate_population: no counts");
    }
    std::uint64_t all_v = outcome_count(counts.n_photons) - 1;
    std::uint64_t extremal = 0;
    for (auto key : {std::uint64_t{0}, all_v}) {
        if (auto it = counts.counts.find(key); it != counts.counts.end()) {
            extremal += it->second;
        }
    }
    double n = static_cast<double>(total);
    double p = static_cast<double>(extremal) / n;
    return {p, std::sqrt(p * (1 - p) / n)};
}

Estimate estimate_parity(const BasisCounts &counts) {
    if (counts.basis.kind != BasisKind::theta) {
        throw ContractError("estimate_parity: counts are not in an equatorial basis");
    }
    std::uint64_t total = counts.total();
    if (total == 0) {
        throw ContractError("estimate_parity: no counts");
    }
    std::uint64_t even = 0;
    for (const auto &[outcome, c] : counts.counts) {
        if (!odd_parity(outcome)) {
            even += c;
        }
    }
    double n = static_cast<double>(total);
    double p = static_cast<double>(even) / n;
    return {2 * p - 1, 2 * std::sqrt(p * (1 - p) / n)};
}

Estimate estimate_coherence(std::span<const BasisCounts> settings) {
    if (settings.empty()) {
        throw ContractError("estimate_coherence: no settings");
    }
    unsigned n = settings.front().n_photons;
    if (settings.size() != n) {
        throw ContractError(
            "estimate_coherence: expected " + std::to_string(n) + " settings, got " + std::to_string(settings.size()));
    }
    std::vector<bool> seen(n, false);
    double sum = 0;
    double var = 0;
    for (const auto &s : settings) {
        if (s.basis.kind != BasisKind::theta || s.n_photons != n) {
            throw ContractError("estimate_coherence: every setting must be equatorial on the same photon number");
        }
        double k_real = s.basis.theta * static_cast<double>(n) / std::numbers::pi;
        double k_round = std::round(k_real);
        if (std::abs(k_real - k_round) > 1e-9 || k_round < 0 || k_round >= n) {
            throw ContractError("estimate_coherence: setting " + s.basis.label() + " is not of the form k pi / N");
        }
        auto k = static_cast<unsigned>(k_round);
        if (seen[k]) {
            throw ContractError("estimate_coherence: duplicate setting k = " + std::to_string(k));
        }
        seen[k] = true;
        auto m = estimate_parity(s);
        sum += (k & 1) ? -m.value : m.value;
        var += m.sigma * m.sigma;
    }
    double inv_n = 1.0 / static_cast<double>(n);
    return {sum * inv_n, std::sqrt(var) * inv_n};
}

WitnessResult fidelity_and_witness(const Estimate &population, const Estimate &coherence) {
    WitnessResult w;
    w.fidelity = (population.value + coherence.value) / 2;
    w.sigma = 0.5 * std::sqrt(population.sigma * population.sigma + coherence.sigma * coherence.sigma);
    w.genuine = w.fidelity - 0.5 > 0;
    double excess = w.fidelity - 0.5;
    if (w.sigma > 0) {
        w.significance = excess / w.sigma;
    } else if (excess == 0) {
        w.significance = 0;
    } else {
        w.significance = std::copysign(std::numeric_limits<double>::infinity(), excess);
    }
    return w;
}

GhzRun run_ghz_experiment(const GhzModel &model, std::uint64_t shots_per_setting, std::uint64_t seed) {
    model.validate();
    GhzRun run;
    run.model = model;
    run.hv = simulate_counts(model, MeasurementBasis::hv(), shots_per_setting, derive_seed(seed, "ghz-setting", 0));
    auto thetas = coherence_settings(model.n_photons);
    for (std::size_t k = 0; k < thetas.size(); k++) {
        run.equatorial.push_back(simulate_counts(
            model, MeasurementBasis::equatorial(thetas[k]), shots_per_setting, derive_seed(seed, "ghz-setting", k + 1)));
    }
    run.population = estimate_population(run.hv);
    run.coherence = estimate_coherence(run.equatorial);
    run.witness = fidelity_and_witness(run.population, run.coherence);
    return run;
}

}  // namespace bosonsim
