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

/*
 * bosonsim C API.
 *
 * Every object is an opaque handle created by a bs_*_create/load/run call
 * and released with the matching bs_*_free. Functions that can fail return
 * a bs_status; on failure bs_last_error() describes what went wrong on the
 * calling thread. Occupation patterns cross the boundary as compact strings
 * with one decimal digit per mode, e.g. "010011000000".
 *
 * Header arguments are optional (NULL allowed) newline-separated
 * "key: value" lines recorded at the top of the written file.
 */
#ifndef BOSONSIM_BOSONSIM_H
#define BOSONSIM_BOSONSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(BOSONSIM_BUILDING_LIBRARY)
#define BS_API __attribute__((visibility("default")))
#else
#define BS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bs_status {
    BS_OK = 0,
    BS_ERR_DIMENSION = 1,        /* shape mismatch */
    BS_ERR_CONTRACT = 2,         /* precondition violated */
    BS_ERR_REFUSED = 3,          /* resource guard refused the request */
    BS_ERR_DATA = 4,             /* data inconsistent with the model */
    BS_ERR_IO = 5,               /* file could not be read or written */
    BS_ERR_PARSE = 6,            /* malformed file content */
    BS_ERR_INVALID_ARGUMENT = 7, /* NULL handle or output pointer */
    BS_ERR_INTERNAL = 8
} bs_status;

BS_API const char *bs_version(void);
BS_API const char *bs_status_name(bs_status status);
/* Message of the last failed call on this thread, "" if none. */
BS_API const char *bs_last_error(void);

/* ------------------------------------------------------------------ */
/* Matrices                                                            */
/* ------------------------------------------------------------------ */

typedef struct bs_matrix bs_matrix;

/* re_im holds rows*cols interleaved (re, im) pairs in row-major order. */
BS_API bs_status bs_matrix_create(size_t rows, size_t cols, const double *re_im, bs_matrix **out);
BS_API bs_status bs_matrix_haar(size_t m, uint64_t seed, bs_matrix **out);
BS_API bs_status bs_matrix_load(const char *path, bs_matrix **out);
BS_API bs_status bs_matrix_save(const bs_matrix *m, const char *path, const char *header);
BS_API void bs_matrix_free(bs_matrix *m);
BS_API size_t bs_matrix_rows(const bs_matrix *m);
BS_API size_t bs_matrix_cols(const bs_matrix *m);
BS_API bs_status bs_matrix_get(const bs_matrix *m, size_t row, size_t col, double *re, double *im);
BS_API bs_status bs_matrix_is_unitary(const bs_matrix *m, double tol, int *out);

/* ------------------------------------------------------------------ */
/* Permanents                                                          */
/* ------------------------------------------------------------------ */

typedef enum bs_permanent_method {
    BS_PERMANENT_NAIVE = 0,    /* n <= 10 */
    BS_PERMANENT_RYSER = 1,    /* n <= 30 */
    BS_PERMANENT_PARALLEL = 2  /* n <= 30, uses `threads` workers */
} bs_permanent_method;

BS_API bs_status bs_permanent(
    const bs_matrix *m, bs_permanent_method method, unsigned threads, double *re, double *im);

/* ------------------------------------------------------------------ */
/* Sources                                                             */
/* ------------------------------------------------------------------ */

typedef struct bs_source_params {
    double epsilon;
    double eta_herald;
    double eta_detect;
    double indistinguishability;
    double rep_rate;
} bs_source_params;

/* Reads a source config. Call with out == NULL to query the count. */
BS_API bs_status bs_sources_load(const char *path, bs_source_params *out, size_t capacity, size_t *count);

typedef struct bs_jsa bs_jsa;

BS_API bs_status bs_jsa_gaussian(
    double sigma_pump, double sigma_pm, double correlation_angle, size_t grid_size, double span, bs_jsa **out);
BS_API bs_status bs_jsa_fit_angle(
    double target_purity, double sigma_pump, double sigma_pm, size_t grid_size, double span, double *angle);
BS_API bs_status bs_jsa_purity(const bs_jsa *jsa, double *out);
BS_API bs_status bs_jsa_predicted_visibility(const bs_jsa *jsa, double *out);
BS_API size_t bs_jsa_grid_size(const bs_jsa *jsa);
BS_API double bs_jsa_nu_step(const bs_jsa *jsa);
BS_API int bs_jsa_truncated(const bs_jsa *jsa);
/* Writes the amplitude grid in the matrix file format. */
BS_API bs_status bs_jsa_save(const bs_jsa *jsa, const char *path, const char *header);
BS_API void bs_jsa_free(bs_jsa *jsa);

BS_API bs_status bs_hom_dip(double visibility, double sigma, double tau, double *out);

/* ------------------------------------------------------------------ */
/* GHZ                                                                 */
/* ------------------------------------------------------------------ */

typedef struct bs_ghz_model {
    unsigned n_photons;
    double population;
    double coherence;
} bs_ghz_model;

typedef struct bs_ghz_summary {
    double population;
    double population_sigma;
    double coherence;
    double coherence_sigma;
    double fidelity;
    double fidelity_sigma;
    int genuine;
    double significance;
} bs_ghz_summary;

BS_API bs_status bs_ghz_witness(
    double population, double population_sigma, double coherence, double coherence_sigma, bs_ghz_summary *out);
/* Estimators applied to the exact outcome distributions (zero sigmas). */
BS_API bs_status bs_ghz_exact_summary(const bs_ghz_model *model, bs_ghz_summary *out);

typedef struct bs_ghz_run bs_ghz_run;

BS_API bs_status bs_ghz_simulate(const bs_ghz_model *model, uint64_t shots_per_setting, uint64_t seed, bs_ghz_run **out);
BS_API bs_status bs_ghz_run_summary(const bs_ghz_run *run, bs_ghz_summary *out);
/* Setting 0 is the H/V basis, settings 1..N are theta = (s-1) pi / N. */
BS_API size_t bs_ghz_run_setting_count(const bs_ghz_run *run);
/* The label and outcome strings stay valid until the run is freed. */
BS_API bs_status bs_ghz_run_setting(const bs_ghz_run *run, size_t setting, const char **label, size_t *outcomes);
BS_API bs_status bs_ghz_run_outcome(
    const bs_ghz_run *run, size_t setting, size_t index, const char **outcome, uint64_t *count);
BS_API void bs_ghz_run_free(bs_ghz_run *run);

/* ------------------------------------------------------------------ */
/* Boson sampling                                                      */
/* ------------------------------------------------------------------ */

typedef enum bs_hypothesis { BS_INDISTINGUISHABLE = 0, BS_DISTINGUISHABLE = 1 } bs_hypothesis;

typedef struct bs_distribution bs_distribution;

BS_API bs_status bs_distribution_exact(
    const bs_matrix *u, const char *input, int collisions, bs_hypothesis hypothesis, bs_distribution **out);
BS_API size_t bs_distribution_size(const bs_distribution *d);
/* Copies the outcome pattern (NUL terminated) into buf. */
BS_API bs_status bs_distribution_get(
    const bs_distribution *d, size_t index, char *buf, size_t buf_size, double *probability);
BS_API bs_status bs_distribution_probability(const bs_distribution *d, const char *outcome, double *probability);
BS_API void bs_distribution_free(bs_distribution *d);

typedef struct bs_records bs_records;

BS_API bs_status bs_sample_standard(
    const bs_matrix *u,
    const char *input,
    uint64_t shots,
    bs_hypothesis hypothesis,
    int collisions,
    uint64_t seed,
    bs_records **out);
BS_API size_t bs_records_count(const bs_records *r);
/* Pattern buffers may be NULL. Each must hold modes + 1 bytes. */
BS_API bs_status bs_records_get(
    const bs_records *r,
    size_t index,
    uint64_t *pulse_index,
    char *trigger,
    char *input,
    char *output,
    size_t buf_size);
BS_API bs_status bs_records_save(const bs_records *r, const char *path, const char *header);
BS_API bs_status bs_records_load(const char *path, bs_records **out);
BS_API void bs_records_free(bs_records *r);

typedef struct bs_rate_report {
    unsigned n;
    uint64_t pulses;
    uint64_t herald_events;
    double herald_rate_hz;
    double predicted_herald_rate_hz;
    uint64_t retained_events;
    double rate_hz;
    double predicted_rate_hz;
    uint64_t distinct_trigger_patterns;
    uint64_t combinations; /* C(k, n) */
    /* Pulses per herald count 0..k; owned by the scattershot handle. */
    const uint64_t *herald_histogram;
    size_t herald_histogram_size;
} bs_rate_report;

typedef struct bs_scattershot bs_scattershot;

/* One source per mode: k must equal the matrix dimension. */
BS_API bs_status bs_scattershot_run(
    const bs_matrix *u,
    const bs_source_params *sources,
    size_t k,
    uint64_t pulses,
    unsigned n_select,
    uint64_t seed,
    unsigned threads,
    bs_scattershot **out);
BS_API bs_status bs_scattershot_report(const bs_scattershot *s, bs_rate_report *out);
/* Borrowed; valid until the scattershot handle is freed. */
BS_API const bs_records *bs_scattershot_records(const bs_scattershot *s);
BS_API void bs_scattershot_free(bs_scattershot *s);

BS_API bs_status bs_expected_rate(
    unsigned k, unsigned n, double eps, double eta, double rep_rate, int scattershot, double *out);
BS_API uint64_t bs_binomial(uint64_t n, uint64_t k);

/* ------------------------------------------------------------------ */
/* Validation                                                          */
/* ------------------------------------------------------------------ */

typedef enum bs_verdict { BS_VERDICT_INDISTINGUISHABLE = 0, BS_VERDICT_DISTINGUISHABLE = 1, BS_VERDICT_INCONCLUSIVE = 2 } bs_verdict;

BS_API const char *bs_verdict_name(bs_verdict v);

/* Statistics of two probability vectors over the same outcome index. */
BS_API bs_status bs_similarity(const double *p, const double *q, size_t n, double *out);
BS_API bs_status bs_tv_distance(const double *p, const double *q, size_t n, double *out);

typedef struct bs_validation bs_validation;

typedef struct bs_validation_summary {
    size_t groups;
    double mean_similarity;
    double sd_similarity;
    double mean_distance;
    double sd_distance;
    double pooled_similarity;
    double pooled_distance;
    double final_log_ratio;
    bs_verdict verdict;
    uint64_t samples_used;
    uint64_t skipped_collisions;
} bs_validation_summary;

BS_API bs_status bs_validate(
    const bs_records *records,
    const bs_matrix *u,
    bs_hypothesis alternative,
    double threshold,
    int collisions,
    bs_validation **out);
BS_API bs_status bs_validation_summary_get(const bs_validation *v, bs_validation_summary *out);
BS_API bs_status bs_validation_group(
    const bs_validation *v, size_t index, char *input, size_t buf_size, uint64_t *samples, double *similarity, double *distance);
BS_API size_t bs_validation_trajectory_size(const bs_validation *v);
/* Borrowed; valid until the validation handle is freed. */
BS_API const double *bs_validation_trajectory(const bs_validation *v);
BS_API void bs_validation_free(bs_validation *v);

#ifdef __cplusplus
}
#endif

#endif
