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

#include "bosonsim/sampling.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "bosonsim/errors.h"
#include "bosonsim/permanent.h"

namespace bosonsim {

namespace {

constexpr std::uint64_t kPulsesPerBatch = std::uint64_t{1} << 18;

void enumerate_into(
    std::vector<std::uint32_t> &current,
    std::size_t mode,
    unsigned remaining,
    bool collisions,
    std::vector<ModeOccupation> &out) {
    if (mode + 1 == current.size()) {
        if (collisions || remaining <= 1) {
            current[mode] = remaining;
            out.emplace_back(current);
            current[mode] = 0;
        }
        return;
    }
    unsigned cap = collisions ? remaining : std::min(remaining, 1u);
    // Highest count first so the result comes out in descending order; the
    // caller reverses to ascending.
    for (unsigned c = cap + 1; c-- > 0;) {
        current[mode] = c;
        enumerate_into(current, mode + 1, remaining - c, collisions, out);
    }
    current[mode] = 0;
}

void check_exact_request(const ComplexMatrix &u, const ModeOccupation &input, bool collisions, const char *who) {
    if (!u.is_square()) {
        throw DimensionError(std::string(who) + ": interferometer matrix is not square");
    }
    if (input.modes() != u.rows()) {
        throw DimensionError(
            std::string(who) + ": input spans " + std::to_string(input.modes()) + " modes, interferometer has " +
            std::to_string(u.rows()));
    }
    unsigned n = input.photons();
    if (n == 0) {
        throw ContractError(std::string(who) + ": input must contain at least one photon");
    }
    if (!collisions && n > u.rows()) {
        throw ContractError(std::string(who) + ": no collision-free outcome exists for n > m");
    }
    std::uint64_t outcomes = binomial_coefficient(u.rows() + n - 1, n);
    if (n > kMaxExactPhotons || outcomes > kMaxEnumeratedOutcomes) {
        throw RefusalError(
            std::string(who) + ": n = " + std::to_string(n) + " on m = " + std::to_string(u.rows()) +
            " modes exceeds the exact-enumeration guard; use a Monte-Carlo sampler instead");
    }
}

template <class ProbabilityFn>
OutcomeDistribution build_distribution(
    const ModeOccupation &input, std::size_t modes, bool collisions, ProbabilityFn &&probability_of) {
    auto outcomes = enumerate_outcomes(modes, input.photons(), collisions);
    std::vector<double> probs(outcomes.size());
    for (std::size_t i = 0; i < outcomes.size(); i++) {
        probs[i] = probability_of(outcomes[i]);
    }
    if (!collisions) {
        double total = std::accumulate(probs.begin(), probs.end(), 0.0);
        if (!(total > 0)) {
            throw DataError("no collision-free outcome has nonzero probability for input " + input.str());
        }
        for (auto &p : probs) {
            p /= total;
        }
    }
    return OutcomeDistribution(std::move(outcomes), std::move(probs));
}

void validate_sources(std::span<const SourceParams> sources) {
    if (sources.empty()) {
        throw ContractError("no sources given");
    }
    for (const auto &s : sources) {
        s.validate();
        if (s.rep_rate != sources.front().rep_rate) {
            throw ContractError("all sources must share one pump repetition rate");
        }
    }
}

/// Coefficient of x^n in prod_i (a_i + b_i x).
double generating_coefficient(std::span<const double> a, std::span<const double> b, unsigned n) {
    std::vector<double> poly(1, 1.0);
    for (std::size_t i = 0; i < a.size(); i++) {
        std::vector<double> next(poly.size() + 1, 0.0);
        for (std::size_t d = 0; d < poly.size(); d++) {
            next[d] += poly[d] * a[i];
            next[d + 1] += poly[d] * b[i];
        }
        poly = std::move(next);
    }
    return n < poly.size() ? poly[n] : 0.0;
}

class SamplerCache {
   public:
    SamplerCache(const ComplexMatrix &u) : u_(u) {}

    std::shared_ptr<const OutcomeSampler> get(const ModeOccupation &input) {
        std::lock_guard lock(mu_);
        auto it = cache_.find(input);
        if (it == cache_.end()) {
            auto sampler = std::make_shared<const OutcomeSampler>(exact_distribution(u_, input, true));
            it = cache_.emplace(input, std::move(sampler)).first;
        }
        return it->second;
    }

   private:
    const ComplexMatrix &u_;
    std::mutex mu_;
    std::map<ModeOccupation, std::shared_ptr<const OutcomeSampler>> cache_;
};

struct BatchResult {
    std::vector<SampleRecord> records;
    std::vector<std::uint64_t> histogram;
    std::set<ModeOccupation> triggers;
};

}  // namespace

OutcomeDistribution::OutcomeDistribution(std::vector<ModeOccupation> outcomes, std::vector<double> probabilities) {
    if (outcomes.size() != probabilities.size()) {
        throw DimensionError("OutcomeDistribution: outcome and probability counts differ");
    }
    std::vector<std::size_t> order(outcomes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return outcomes[a] < outcomes[b]; });
    outcomes_.reserve(order.size());
    probabilities_.reserve(order.size());
    double total = 0;
    for (std::size_t i : order) {
        double p = probabilities[i];
        if (!(p >= 0) || !std::isfinite(p)) {
            throw ContractError("OutcomeDistribution: probabilities must be finite and non-negative");
        }
        if (!outcomes_.empty() && outcomes_.back() == outcomes[i]) {
            throw ContractError("OutcomeDistribution: duplicate outcome " + outcomes[i].str());
        }
        if (!outcomes_.empty() && outcomes_.back().modes() != outcomes[i].modes()) {
            throw DimensionError("OutcomeDistribution: outcomes span different mode counts");
        }
        outcomes_.push_back(std::move(outcomes[i]));
        probabilities_.push_back(p);
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw ContractError("OutcomeDistribution: probabilities sum to " + std::to_string(total));
    }
}

std::optional<std::size_t> OutcomeDistribution::index_of(const ModeOccupation &outcome) const {
    auto it = std::lower_bound(outcomes_.begin(), outcomes_.end(), outcome);
    if (it == outcomes_.end() || *it != outcome) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - outcomes_.begin());
}

double OutcomeDistribution::probability_of(const ModeOccupation &outcome) const {
    auto i = index_of(outcome);
    return i ? probabilities_[*i] : 0.0;
}

std::vector<ModeOccupation> enumerate_outcomes(std::size_t modes, unsigned photons, bool collisions) {
    std::vector<ModeOccupation> out;
    if (modes == 0) {
        return out;
    }
    std::vector<std::uint32_t> current(modes, 0);
    enumerate_into(current, 0, photons, collisions, out);
    std::reverse(out.begin(), out.end());
    return out;
}

std::uint64_t binomial_coefficient(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; i++) {
        // Exact at every step: result * (n - k + i) is divisible by i.
        result = result * (n - k + i) / i;
    }
    return result;
}

OutcomeDistribution exact_distribution(const ComplexMatrix &u, const ModeOccupation &input, bool collisions) {
    check_exact_request(u, input, collisions, "exact_distribution");
    double input_norm = input.factorial_product();
    return build_distribution(input, u.rows(), collisions, [&](const ModeOccupation &out) {
        Complex amp = permanent_ryser(transition_submatrix(u, input, out));
        return std::norm(amp) / (input_norm * out.factorial_product());
    });
}

OutcomeDistribution distinguishable_distribution(const ComplexMatrix &u, const ModeOccupation &input, bool collisions) {
    check_exact_request(u, input, collisions, "distinguishable_distribution");
    ComplexMatrix weights(u.rows(), u.cols());
    for (std::size_t i = 0; i < u.rows(); i++) {
        for (std::size_t j = 0; j < u.cols(); j++) {
            weights(i, j) = std::norm(u(i, j));
        }
    }
    return build_distribution(input, u.rows(), collisions, [&](const ModeOccupation &out) {
        double perm = permanent_ryser(transition_submatrix(weights, input, out)).real();
        return std::max(perm, 0.0) / out.factorial_product();
    });
}

OutcomeDistribution hypothesis_distribution(
    const ComplexMatrix &u, const ModeOccupation &input, bool collisions, Hypothesis hypothesis) {
    return hypothesis == Hypothesis::indistinguishable ? exact_distribution(u, input, collisions)
                                                       : distinguishable_distribution(u, input, collisions);
}

OutcomeSampler::OutcomeSampler(OutcomeDistribution dist) : dist_(std::move(dist)) {
    if (dist_.size() == 0) {
        throw ContractError("OutcomeSampler: empty distribution");
    }
    cdf_.resize(dist_.size());
    std::partial_sum(dist_.probabilities().begin(), dist_.probabilities().end(), cdf_.begin());
}

std::size_t OutcomeSampler::sample_index(Rng &rng) const {
    double u = uniform01(rng) * cdf_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    auto i = static_cast<std::size_t>(it - cdf_.begin());
    i = std::min(i, cdf_.size() - 1);
    // Never land on a zero-probability outcome through rounding at the edges.
    while (dist_.probability(i) == 0 && i > 0) {
        i--;
    }
    return i;
}

std::vector<ModeOccupation> sample_outputs(const OutcomeDistribution &dist, std::uint64_t shots, std::uint64_t seed) {
    OutcomeSampler sampler(dist);
    auto rng = make_rng(seed, "sample-outputs");
    std::vector<ModeOccupation> out;
    out.reserve(shots);
    for (std::uint64_t s = 0; s < shots; s++) {
        out.push_back(sampler.sample(rng));
    }
    return out;
}

std::vector<SampleRecord> standard_sampling_run(
    const ComplexMatrix &u,
    const ModeOccupation &input,
    std::uint64_t shots,
    Hypothesis hypothesis,
    bool collisions,
    std::uint64_t seed) {
    OutcomeSampler sampler(hypothesis_distribution(u, input, collisions, hypothesis));
    auto rng = make_rng(seed, "standard-sampling");
    std::vector<SampleRecord> records;
    records.reserve(shots);
    for (std::uint64_t s = 0; s < shots; s++) {
        records.push_back(SampleRecord{s, input, input, sampler.sample(rng)});
    }
    return records;
}

double expected_rate(unsigned k, unsigned n, double eps, double eta, double rep_rate, bool scattershot) {
    if (n > k) {
        throw ContractError("expected_rate: n must not exceed k");
    }
    if (!(eps >= 0 && eps <= 1) || !(eta >= 0 && eta <= 1)) {
        throw ContractError("expected_rate: eps and eta must lie in [0, 1]");
    }
    if (!(rep_rate > 0)) {
        throw ContractError("expected_rate: rep_rate must be positive");
    }
    double p = eps * eta;
    double rate = rep_rate * std::pow(p, n);
    if (scattershot) {
        rate *= static_cast<double>(binomial_coefficient(k, n)) * std::pow(1 - p, k - n);
    }
    return rate;
}

ScattershotResult scattershot_run(
    const ComplexMatrix &u,
    std::span<const SourceParams> sources,
    std::uint64_t pulses,
    unsigned n_select,
    std::uint64_t seed,
    unsigned threads) {
    if (!u.is_square()) {
        throw DimensionError("scattershot_run: interferometer matrix is not square");
    }
    if (sources.size() != u.rows()) {
        throw ContractError(
            "scattershot_run: need one source per input mode (k = " + std::to_string(sources.size()) +
            ", m = " + std::to_string(u.rows()) + ")");
    }
    validate_sources(sources);
    if (n_select == 0 || n_select > sources.size()) {
        throw ContractError("scattershot_run: n_select must be in [1, k]");
    }
    if (threads == 0) {
        throw ContractError("scattershot_run: threads must be at least 1");
    }
    if (n_select > kMaxExactPhotons) {
        throw RefusalError("scattershot_run: n_select exceeds the exact-enumeration guard");
    }

    const std::size_t k = sources.size();
    double eta_out = 0;
    for (const auto &s : sources) {
        eta_out += s.eta_detect;
    }
    eta_out /= static_cast<double>(k);

    SamplerCache cache(u);
    std::uint64_t batches = (pulses + kPulsesPerBatch - 1) / kPulsesPerBatch;
    std::vector<BatchResult> results(batches);

    auto run_batch = [&](std::uint64_t b) {
        auto rng = make_rng(seed, "scattershot-batch", b);
        BatchResult &res = results[b];
        res.histogram.assign(k + 1, 0);
        std::vector<SourceOutcome> fired(k);
        std::uint64_t begin = b * kPulsesPerBatch;
        std::uint64_t end = std::min(pulses, begin + kPulsesPerBatch);
        for (std::uint64_t pulse = begin; pulse < end; pulse++) {
            fire_sources_into(sources, rng, fired);
            unsigned heralds = 0;
            for (const auto &f : fired) {
                heralds += f.heralded;
            }
            res.histogram[heralds]++;
            if (heralds != n_select) {
                continue;
            }
            auto trigger = ModeOccupation::vacuum(k);
            auto input = ModeOccupation::vacuum(k);
            for (std::size_t i = 0; i < k; i++) {
                trigger[i] = fired[i].heralded;
                input[i] = fired[i].heralded && fired[i].signal_present;
            }
            res.triggers.insert(trigger);
            if (input.photons() == 0) {
                continue;
            }
            const ModeOccupation &landed = cache.get(input)->sample(rng);
            auto detected = ModeOccupation::vacuum(k);
            unsigned detected_count = 0;
            for (std::size_t j = 0; j < k; j++) {
                for (std::uint32_t c = 0; c < landed[j]; c++) {
                    if (uniform01(rng) < eta_out) {
                        detected[j]++;
                        detected_count++;
                    }
                }
            }
            if (detected_count == n_select) {
                res.records.push_back(SampleRecord{pulse, std::move(trigger), std::move(input), std::move(detected)});
            }
        }
    };

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t b = next++; b < batches; b = next++) {
            run_batch(b);
        }
    };
    unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(batches, 1)));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; t++) {
            pool.emplace_back(worker);
        }
    }

    ScattershotResult result;
    RateReport &rep = result.report;
    rep.n = n_select;
    rep.pulses = pulses;
    rep.herald_histogram.assign(k + 1, 0);
    std::set<ModeOccupation> triggers;
    for (auto &res : results) {
        for (std::size_t h = 0; h < res.histogram.size(); h++) {
            rep.herald_histogram[h] += res.histogram[h];
        }
        triggers.merge(res.triggers);
        result.records.insert(
            result.records.end(), std::make_move_iterator(res.records.begin()), std::make_move_iterator(res.records.end()));
    }
    rep.herald_events = rep.herald_histogram[n_select];
    rep.retained_events = result.records.size();
    rep.distinct_trigger_patterns = triggers.size();

    double rep_rate = sources.front().rep_rate;
    double duration = pulses > 0 ? static_cast<double>(pulses) / rep_rate : 0.0;
    rep.herald_rate_hz = duration > 0 ? static_cast<double>(rep.herald_events) / duration : 0.0;
    rep.rate_hz = duration > 0 ? static_cast<double>(rep.retained_events) / duration : 0.0;

    std::vector<double> idle(k), herald(k), delivered(k);
    for (std::size_t i = 0; i < k; i++) {
        double h = sources[i].herald_probability();
        idle[i] = 1 - h;
        herald[i] = h;
        delivered[i] = h * sources[i].eta_herald * eta_out;
    }
    rep.predicted_herald_rate_hz = rep_rate * generating_coefficient(idle, herald, n_select);
    rep.predicted_rate_hz = rep_rate * generating_coefficient(idle, delivered, n_select);
    return result;
}

}  // namespace bosonsim
