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

#include "bosonsim/bosonsim.h"

#include <cstring>
#include <memory>
#include <sstream>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "bosonsim/errors.h"
#include "bosonsim/ghz.h"
#include "bosonsim/io.h"
#include "bosonsim/linalg.h"
#include "bosonsim/permanent.h"
#include "bosonsim/sampling.h"
#include "bosonsim/sources.h"
#include "bosonsim/validation.h"

struct bs_matrix {
    bosonsim::ComplexMatrix m;
};

struct bs_jsa {
    bosonsim::JointSpectrum jsa;
};

struct bs_ghz_run {
    bosonsim::GhzRun run;
    // Per setting: label and (outcome string, count) rows, kept alive for
    // the borrowed const char* handed out by the accessors.
    std::vector<std::string> labels;
    std::vector<std::vector<std::pair<std::string, std::uint64_t>>> rows;
};

struct bs_distribution {
    bosonsim::OutcomeDistribution d;
};

struct bs_records {
    std::vector<bosonsim::SampleRecord> records;
};

struct bs_scattershot {
    bs_records records;
    bosonsim::RateReport report;
    std::uint64_t combinations = 0;
};

struct bs_validation {
    bosonsim::AggregateValidation agg;
};

namespace {

thread_local std::string last_error;

bs_status fail(bs_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

/// Runs `body`, translating exceptions into status codes.
template <class Body>
bs_status guarded(Body &&body) {
    try {
        body();
        last_error.clear();
        return BS_OK;
    } catch (const bosonsim::DimensionError &e) {
        return fail(BS_ERR_DIMENSION, e.what());
    } catch (const bosonsim::ContractError &e) {
        return fail(BS_ERR_CONTRACT, e.what());
    } catch (const bosonsim::RefusalError &e) {
        return fail(BS_ERR_REFUSED, e.what());
    } catch (const bosonsim::DataError &e) {
        return fail(BS_ERR_DATA, e.what());
    } catch (const bosonsim::IoError &e) {
        return fail(BS_ERR_IO, e.what());
    } catch (const bosonsim::ParseError &e) {
        return fail(BS_ERR_PARSE, e.what());
    } catch (const std::bad_alloc &) {
        return fail(BS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(BS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BS_ERR_INTERNAL, "unknown error");
    }
}

#define BS_REQUIRE(ptr)                                                           \
    do {                                                                          \
        if ((ptr) == nullptr) {                                                   \
            return fail(BS_ERR_INVALID_ARGUMENT, "null argument: " #ptr);         \
        }                                                                         \
    } while (0)

bosonsim::HeaderFields parse_header(const char *header) {
    bosonsim::HeaderFields fields;
    if (header == nullptr) {
        return fields;
    }
    std::string text(header);
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        std::string line = text.substr(start, end - start);
        if (!line.empty()) {
            auto colon = line.find(':');
            if (colon == std::string::npos) {
                fields.emplace_back(line, "");
            } else {
                auto value = line.substr(colon + 1);
                auto b = value.find_first_not_of(' ');
                fields.emplace_back(line.substr(0, colon), b == std::string::npos ? "" : value.substr(b));
            }
        }
        start = end + 1;
    }
    return fields;
}

bs_status copy_pattern(const bosonsim::ModeOccupation &occ, char *buf, std::size_t size) {
    if (buf == nullptr) {
        return BS_OK;
    }
    std::string s = occ.str();
    if (size < s.size() + 1) {
        return fail(BS_ERR_CONTRACT, "pattern buffer too small: need " + std::to_string(s.size() + 1) + " bytes");
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return BS_OK;
}

bosonsim::Hypothesis to_hypothesis(bs_hypothesis h) {
    return h == BS_DISTINGUISHABLE ? bosonsim::Hypothesis::distinguishable : bosonsim::Hypothesis::indistinguishable;
}

bosonsim::SourceParams to_source(const bs_source_params &p) {
    return {p.epsilon, p.eta_herald, p.eta_detect, p.indistinguishability, p.rep_rate};
}

void fill_summary(const bosonsim::Estimate &p, const bosonsim::Estimate &c, const bosonsim::WitnessResult &w, bs_ghz_summary *out) {
    out->population = p.value;
    out->population_sigma = p.sigma;
    out->coherence = c.value;
    out->coherence_sigma = c.sigma;
    out->fidelity = w.fidelity;
    out->fidelity_sigma = w.sigma;
    out->genuine = w.genuine ? 1 : 0;
    out->significance = w.significance;
}

bs_verdict to_c_verdict(bosonsim::Verdict v) {
    switch (v) {
        case bosonsim::Verdict::indistinguishable:
            return BS_VERDICT_INDISTINGUISHABLE;
        case bosonsim::Verdict::distinguishable:
            return BS_VERDICT_DISTINGUISHABLE;
        case bosonsim::Verdict::inconclusive:
            break;
    }
    return BS_VERDICT_INCONCLUSIVE;
}

}  // namespace

extern "C" {

const char *bs_version(void) {
    return BOSONSIM_VERSION_STRING;
}

const char *bs_status_name(bs_status status) {
    switch (status) {
        case BS_OK:
            return "ok";
        case BS_ERR_DIMENSION:
            return "dimension error";
        case BS_ERR_CONTRACT:
            return "contract error";
        case BS_ERR_REFUSED:
            return "refused";
        case BS_ERR_DATA:
            return "data error";
        case BS_ERR_IO:
            return "i/o error";
        case BS_ERR_PARSE:
            return "parse error";
        case BS_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case BS_ERR_INTERNAL:
            break;
    }
    return "internal error";
}

const char *bs_last_error(void) {
    return last_error.c_str();
}

// Matrices

bs_status bs_matrix_create(size_t rows, size_t cols, const double *re_im, bs_matrix **out) {
    BS_REQUIRE(out);
    if (rows * cols > 0) {
        BS_REQUIRE(re_im);
    }
    return guarded([&] {
        std::vector<bosonsim::Complex> values(rows * cols);
        for (std::size_t i = 0; i < values.size(); i++) {
            values[i] = {re_im[2 * i], re_im[2 * i + 1]};
        }
        *out = new bs_matrix{bosonsim::ComplexMatrix(rows, cols, std::move(values))};
    });
}

bs_status bs_matrix_haar(size_t m, uint64_t seed, bs_matrix **out) {
    BS_REQUIRE(out);
    return guarded([&] { *out = new bs_matrix{bosonsim::haar_random_unitary(m, seed)}; });
}

bs_status bs_matrix_load(const char *path, bs_matrix **out) {
    BS_REQUIRE(path);
    BS_REQUIRE(out);
    return guarded([&] { *out = new bs_matrix{bosonsim::read_matrix_file(path)}; });
}

bs_status bs_matrix_save(const bs_matrix *m, const char *path, const char *header) {
    BS_REQUIRE(m);
    BS_REQUIRE(path);
    return guarded([&] { bosonsim::write_matrix_file(path, m->m, parse_header(header)); });
}

void bs_matrix_free(bs_matrix *m) {
    delete m;
}

size_t bs_matrix_rows(const bs_matrix *m) {
    return m ? m->m.rows() : 0;
}

size_t bs_matrix_cols(const bs_matrix *m) {
    return m ? m->m.cols() : 0;
}

bs_status bs_matrix_get(const bs_matrix *m, size_t row, size_t col, double *re, double *im) {
    BS_REQUIRE(m);
    BS_REQUIRE(re);
    BS_REQUIRE(im);
    if (row >= m->m.rows() || col >= m->m.cols()) {
        return fail(BS_ERR_DIMENSION, "matrix index out of range");
    }
    *re = m->m(row, col).real();
    *im = m->m(row, col).imag();
    return BS_OK;
}

bs_status bs_matrix_is_unitary(const bs_matrix *m, double tol, int *out) {
    BS_REQUIRE(m);
    BS_REQUIRE(out);
    return guarded([&] { *out = bosonsim::check_unitary(m->m, tol) ? 1 : 0; });
}

// Permanents

bs_status bs_permanent(const bs_matrix *m, bs_permanent_method method, unsigned threads, double *re, double *im) {
    BS_REQUIRE(m);
    BS_REQUIRE(re);
    BS_REQUIRE(im);
    return guarded([&] {
        bosonsim::Complex v;
        switch (method) {
            case BS_PERMANENT_NAIVE:
                v = bosonsim::permanent_naive(m->m);
                break;
            case BS_PERMANENT_RYSER:
                v = bosonsim::permanent_ryser(m->m);
                break;
            case BS_PERMANENT_PARALLEL:
                v = bosonsim::permanent_parallel(m->m, threads);
                break;
            default:
                throw bosonsim::ContractError("unknown permanent method");
        }
        *re = v.real();
        *im = v.imag();
    });
}

// Sources

bs_status bs_sources_load(const char *path, bs_source_params *out, size_t capacity, size_t *count) {
    BS_REQUIRE(path);
    BS_REQUIRE(count);
    return guarded([&] {
        auto sources = bosonsim::read_source_config(path);
        *count = sources.size();
        if (out == nullptr) {
            return;
        }
        if (capacity < sources.size()) {
            throw bosonsim::ContractError(
                "bs_sources_load: capacity " + std::to_string(capacity) + " < " + std::to_string(sources.size()));
        }
        for (std::size_t i = 0; i < sources.size(); i++) {
            const auto &s = sources[i];
            out[i] = {s.epsilon, s.eta_herald, s.eta_detect, s.indistinguishability, s.rep_rate};
        }
    });
}

bs_status bs_jsa_gaussian(
    double sigma_pump, double sigma_pm, double correlation_angle, size_t grid_size, double span, bs_jsa **out) {
    BS_REQUIRE(out);
    return guarded([&] {
        *out = new bs_jsa{bosonsim::gaussian_jsa(sigma_pump, sigma_pm, correlation_angle, grid_size, span)};
    });
}

bs_status bs_jsa_fit_angle(
    double target_purity, double sigma_pump, double sigma_pm, size_t grid_size, double span, double *angle) {
    BS_REQUIRE(angle);
    return guarded([&] {
        *angle = bosonsim::fit_correlation_angle(target_purity, sigma_pump, sigma_pm, grid_size, span);
    });
}

bs_status bs_jsa_purity(const bs_jsa *jsa, double *out) {
    BS_REQUIRE(jsa);
    BS_REQUIRE(out);
    return guarded([&] { *out = bosonsim::schmidt_purity(jsa->jsa); });
}

bs_status bs_jsa_predicted_visibility(const bs_jsa *jsa, double *out) {
    BS_REQUIRE(jsa);
    BS_REQUIRE(out);
    return guarded([&] { *out = bosonsim::predicted_visibility(jsa->jsa); });
}

size_t bs_jsa_grid_size(const bs_jsa *jsa) {
    return jsa ? jsa->jsa.grid.rows() : 0;
}

double bs_jsa_nu_step(const bs_jsa *jsa) {
    return jsa ? jsa->jsa.nu_step : 0.0;
}

int bs_jsa_truncated(const bs_jsa *jsa) {
    return jsa && jsa->jsa.truncated ? 1 : 0;
}

bs_status bs_jsa_save(const bs_jsa *jsa, const char *path, const char *header) {
    BS_REQUIRE(jsa);
    BS_REQUIRE(path);
    return guarded([&] {
        auto fields = parse_header(header);
        std::ostringstream step;
        step.precision(17);
        step << jsa->jsa.nu_step;
        fields.emplace_back("nu_step", step.str());
        fields.emplace_back("truncated", jsa->jsa.truncated ? "true" : "false");
        bosonsim::write_matrix_file(path, jsa->jsa.grid, fields);
    });
}

void bs_jsa_free(bs_jsa *jsa) {
    delete jsa;
}

bs_status bs_hom_dip(double visibility, double sigma, double tau, double *out) {
    BS_REQUIRE(out);
    return guarded([&] { *out = bosonsim::hom_dip(visibility, sigma, tau); });
}

// GHZ

bs_status bs_ghz_witness(
    double population, double population_sigma, double coherence, double coherence_sigma, bs_ghz_summary *out) {
    BS_REQUIRE(out);
    return guarded([&] {
        bosonsim::Estimate p{population, population_sigma};
        bosonsim::Estimate c{coherence, coherence_sigma};
        fill_summary(p, c, bosonsim::fidelity_and_witness(p, c), out);
    });
}

bs_status bs_ghz_exact_summary(const bs_ghz_model *model, bs_ghz_summary *out) {
    BS_REQUIRE(model);
    BS_REQUIRE(out);
    return guarded([&] {
        bosonsim::GhzModel m{model->n_photons, model->population, model->coherence};
        bosonsim::Estimate p{bosonsim::extremal_population(bosonsim::hv_outcome_distribution(m)), 0.0};
        auto thetas = bosonsim::coherence_settings(m.n_photons);
        double c = 0;
        for (std::size_t k = 0; k < thetas.size(); k++) {
            double e = bosonsim::parity_expectation(bosonsim::theta_outcome_distribution(m, thetas[k]));
            c += (k & 1) ? -e : e;
        }
        bosonsim::Estimate coh{c / static_cast<double>(thetas.size()), 0.0};
        fill_summary(p, coh, bosonsim::fidelity_and_witness(p, coh), out);
    });
}

bs_status bs_ghz_simulate(const bs_ghz_model *model, uint64_t shots_per_setting, uint64_t seed, bs_ghz_run **out) {
    BS_REQUIRE(model);
    BS_REQUIRE(out);
    return guarded([&] {
        auto handle = std::make_unique<bs_ghz_run>();
        handle->run = bosonsim::run_ghz_experiment(
            {model->n_photons, model->population, model->coherence}, shots_per_setting, seed);
        auto add = [&](const bosonsim::BasisCounts &counts) {
            handle->labels.push_back(counts.basis.label());
            auto &rows = handle->rows.emplace_back();
            for (const auto &[outcome, c] : counts.counts) {
                rows.emplace_back(counts.outcome_string(outcome), c);
            }
        };
        add(handle->run.hv);
        for (const auto &s : handle->run.equatorial) {
            add(s);
        }
        *out = handle.release();
    });
}

bs_status bs_ghz_run_summary(const bs_ghz_run *run, bs_ghz_summary *out) {
    BS_REQUIRE(run);
    BS_REQUIRE(out);
    fill_summary(run->run.population, run->run.coherence, run->run.witness, out);
    return BS_OK;
}

size_t bs_ghz_run_setting_count(const bs_ghz_run *run) {
    return run ? run->labels.size() : 0;
}

bs_status bs_ghz_run_setting(const bs_ghz_run *run, size_t setting, const char **label, size_t *outcomes) {
    BS_REQUIRE(run);
    if (setting >= run->labels.size()) {
        return fail(BS_ERR_DIMENSION, "setting index out of range");
    }
    if (label) {
        *label = run->labels[setting].c_str();
    }
    if (outcomes) {
        *outcomes = run->rows[setting].size();
    }
    return BS_OK;
}

bs_status bs_ghz_run_outcome(const bs_ghz_run *run, size_t setting, size_t index, const char **outcome, uint64_t *count) {
    BS_REQUIRE(run);
    if (setting >= run->rows.size() || index >= run->rows[setting].size()) {
        return fail(BS_ERR_DIMENSION, "outcome index out of range");
    }
    const auto &row = run->rows[setting][index];
    if (outcome) {
        *outcome = row.first.c_str();
    }
    if (count) {
        *count = row.second;
    }
    return BS_OK;
}

void bs_ghz_run_free(bs_ghz_run *run) {
    delete run;
}

// Sampling

bs_status bs_distribution_exact(
    const bs_matrix *u, const char *input, int collisions, bs_hypothesis hypothesis, bs_distribution **out) {
    BS_REQUIRE(u);
    BS_REQUIRE(input);
    BS_REQUIRE(out);
    return guarded([&] {
        *out = new bs_distribution{bosonsim::hypothesis_distribution(
            u->m, bosonsim::ModeOccupation::parse(input), collisions != 0, to_hypothesis(hypothesis))};
    });
}

size_t bs_distribution_size(const bs_distribution *d) {
    return d ? d->d.size() : 0;
}

bs_status bs_distribution_get(const bs_distribution *d, size_t index, char *buf, size_t buf_size, double *probability) {
    BS_REQUIRE(d);
    if (index >= d->d.size()) {
        return fail(BS_ERR_DIMENSION, "outcome index out of range");
    }
    if (probability) {
        *probability = d->d.probability(index);
    }
    return copy_pattern(d->d.outcome(index), buf, buf_size);
}

bs_status bs_distribution_probability(const bs_distribution *d, const char *outcome, double *probability) {
    BS_REQUIRE(d);
    BS_REQUIRE(outcome);
    BS_REQUIRE(probability);
    return guarded([&] { *probability = d->d.probability_of(bosonsim::ModeOccupation::parse(outcome)); });
}

void bs_distribution_free(bs_distribution *d) {
    delete d;
}

bs_status bs_sample_standard(
    const bs_matrix *u,
    const char *input,
    uint64_t shots,
    bs_hypothesis hypothesis,
    int collisions,
    uint64_t seed,
    bs_records **out) {
    BS_REQUIRE(u);
    BS_REQUIRE(input);
    BS_REQUIRE(out);
    return guarded([&] {
        *out = new bs_records{bosonsim::standard_sampling_run(
            u->m, bosonsim::ModeOccupation::parse(input), shots, to_hypothesis(hypothesis), collisions != 0, seed)};
    });
}

size_t bs_records_count(const bs_records *r) {
    return r ? r->records.size() : 0;
}

bs_status bs_records_get(
    const bs_records *r, size_t index, uint64_t *pulse_index, char *trigger, char *input, char *output, size_t buf_size) {
    BS_REQUIRE(r);
    if (index >= r->records.size()) {
        return fail(BS_ERR_DIMENSION, "record index out of range");
    }
    const auto &rec = r->records[index];
    if (pulse_index) {
        *pulse_index = rec.pulse_index;
    }
    for (auto [occ, buf] : {std::pair{&rec.trigger_pattern, trigger}, {&rec.input_pattern, input}, {&rec.output_pattern, output}}) {
        if (auto s = copy_pattern(*occ, buf, buf_size); s != BS_OK) {
            return s;
        }
    }
    return BS_OK;
}

bs_status bs_records_save(const bs_records *r, const char *path, const char *header) {
    BS_REQUIRE(r);
    BS_REQUIRE(path);
    return guarded([&] { bosonsim::write_sample_log(path, r->records, parse_header(header)); });
}

bs_status bs_records_load(const char *path, bs_records **out) {
    BS_REQUIRE(path);
    BS_REQUIRE(out);
    return guarded([&] { *out = new bs_records{bosonsim::read_sample_log(path)}; });
}

void bs_records_free(bs_records *r) {
    delete r;
}

bs_status bs_scattershot_run(
    const bs_matrix *u,
    const bs_source_params *sources,
    size_t k,
    uint64_t pulses,
    unsigned n_select,
    uint64_t seed,
    unsigned threads,
    bs_scattershot **out) {
    BS_REQUIRE(u);
    BS_REQUIRE(sources);
    BS_REQUIRE(out);
    return guarded([&] {
        std::vector<bosonsim::SourceParams> params;
        params.reserve(k);
        for (std::size_t i = 0; i < k; i++) {
            params.push_back(to_source(sources[i]));
        }
        auto result = bosonsim::scattershot_run(u->m, params, pulses, n_select, seed, threads);
        auto handle = std::make_unique<bs_scattershot>();
        handle->records.records = std::move(result.records);
        handle->report = std::move(result.report);
        handle->combinations = bosonsim::binomial_coefficient(k, n_select);
        *out = handle.release();
    });
}

bs_status bs_scattershot_report(const bs_scattershot *s, bs_rate_report *out) {
    BS_REQUIRE(s);
    BS_REQUIRE(out);
    const auto &r = s->report;
    out->n = r.n;
    out->pulses = r.pulses;
    out->herald_events = r.herald_events;
    out->herald_rate_hz = r.herald_rate_hz;
    out->predicted_herald_rate_hz = r.predicted_herald_rate_hz;
    out->retained_events = r.retained_events;
    out->rate_hz = r.rate_hz;
    out->predicted_rate_hz = r.predicted_rate_hz;
    out->distinct_trigger_patterns = r.distinct_trigger_patterns;
    out->combinations = s->combinations;
    out->herald_histogram = r.herald_histogram.data();
    out->herald_histogram_size = r.herald_histogram.size();
    return BS_OK;
}

const bs_records *bs_scattershot_records(const bs_scattershot *s) {
    return s ? &s->records : nullptr;
}

void bs_scattershot_free(bs_scattershot *s) {
    delete s;
}

bs_status bs_expected_rate(unsigned k, unsigned n, double eps, double eta, double rep_rate, int scattershot, double *out) {
    BS_REQUIRE(out);
    return guarded([&] { *out = bosonsim::expected_rate(k, n, eps, eta, rep_rate, scattershot != 0); });
}

uint64_t bs_binomial(uint64_t n, uint64_t k) {
    return bosonsim::binomial_coefficient(n, k);
}

// Validation

const char *bs_verdict_name(bs_verdict v) {
    switch (v) {
        case BS_VERDICT_INDISTINGUISHABLE:
            return bosonsim::verdict_name(bosonsim::Verdict::indistinguishable);
        case BS_VERDICT_DISTINGUISHABLE:
            return bosonsim::verdict_name(bosonsim::Verdict::distinguishable);
        case BS_VERDICT_INCONCLUSIVE:
            break;
    }
    return bosonsim::verdict_name(bosonsim::Verdict::inconclusive);
}

bs_status bs_similarity(const double *p, const double *q, size_t n, double *out) {
    BS_REQUIRE(p);
    BS_REQUIRE(q);
    BS_REQUIRE(out);
    return guarded([&] {
        std::vector<bosonsim::ModeOccupation> index;
        for (std::size_t i = 0; i < n; i++) {
            index.emplace_back(std::vector<std::uint32_t>{static_cast<std::uint32_t>(i)});
        }
        bosonsim::OutcomeDistribution dp(index, std::vector<double>(p, p + n));
        bosonsim::OutcomeDistribution dq(index, std::vector<double>(q, q + n));
        *out = bosonsim::similarity(dp, dq);
    });
}

bs_status bs_tv_distance(const double *p, const double *q, size_t n, double *out) {
    BS_REQUIRE(p);
    BS_REQUIRE(q);
    BS_REQUIRE(out);
    return guarded([&] {
        std::vector<bosonsim::ModeOccupation> index;
        for (std::size_t i = 0; i < n; i++) {
            index.emplace_back(std::vector<std::uint32_t>{static_cast<std::uint32_t>(i)});
        }
        bosonsim::OutcomeDistribution dp(index, std::vector<double>(p, p + n));
        bosonsim::OutcomeDistribution dq(index, std::vector<double>(q, q + n));
        *out = bosonsim::tv_distance(dp, dq);
    });
}

bs_status bs_validate(
    const bs_records *records,
    const bs_matrix *u,
    bs_hypothesis alternative,
    double threshold,
    int collisions,
    bs_validation **out) {
    BS_REQUIRE(records);
    BS_REQUIRE(u);
    BS_REQUIRE(out);
    return guarded([&] {
        *out = new bs_validation{bosonsim::scattershot_aggregate_validation(
            records->records, u->m, threshold, to_hypothesis(alternative), collisions != 0)};
    });
}

bs_status bs_validation_summary_get(const bs_validation *v, bs_validation_summary *out) {
    BS_REQUIRE(v);
    BS_REQUIRE(out);
    const auto &a = v->agg;
    out->groups = a.groups.size();
    out->mean_similarity = a.mean_similarity;
    out->sd_similarity = a.sd_similarity;
    out->mean_distance = a.mean_distance;
    out->sd_distance = a.sd_distance;
    out->pooled_similarity = a.pooled_similarity;
    out->pooled_distance = a.pooled_distance;
    out->final_log_ratio = a.pooled.lr_trajectory.empty() ? 0.0 : a.pooled.lr_trajectory.back();
    out->verdict = to_c_verdict(a.pooled.verdict);
    out->samples_used = a.pooled.samples_used;
    out->skipped_collisions = a.skipped_collisions;
    return BS_OK;
}

bs_status bs_validation_group(
    const bs_validation *v, size_t index, char *input, size_t buf_size, uint64_t *samples, double *similarity, double *distance) {
    BS_REQUIRE(v);
    if (index >= v->agg.groups.size()) {
        return fail(BS_ERR_DIMENSION, "group index out of range");
    }
    const auto &g = v->agg.groups[index];
    if (samples) {
        *samples = g.samples;
    }
    if (similarity) {
        *similarity = g.similarity;
    }
    if (distance) {
        *distance = g.distance;
    }
    return copy_pattern(g.input, input, buf_size);
}

size_t bs_validation_trajectory_size(const bs_validation *v) {
    return v ? v->agg.pooled.lr_trajectory.size() : 0;
}

const double *bs_validation_trajectory(const bs_validation *v) {
    return v ? v->agg.pooled.lr_trajectory.data() : nullptr;
}

void bs_validation_free(bs_validation *v) {
    delete v;
}

}  // extern "C"
