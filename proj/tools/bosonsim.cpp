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

// Command-line driver. Talks to the library only through the C API.

#include <bosonsim/bosonsim.h>

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,
    kExitDimension = 3,
    kExitContract = 4,
    kExitRefused = 5,
    kExitData = 6,
    kExitIo = 7,
    kExitParse = 8,
};

struct Failure {
    int code;
    std::string message;
};

int exit_code_for(bs_status s) {
    switch (s) {
        case BS_OK:
            return kExitOk;
        case BS_ERR_DIMENSION:
            return kExitDimension;
        case BS_ERR_CONTRACT:
        case BS_ERR_INVALID_ARGUMENT:
            return kExitContract;
        case BS_ERR_REFUSED:
            return kExitRefused;
        case BS_ERR_DATA:
            return kExitData;
        case BS_ERR_IO:
            return kExitIo;
        case BS_ERR_PARSE:
            return kExitParse;
        case BS_ERR_INTERNAL:
            break;
    }
    return kExitInternal;
}

void check(bs_status s) {
    if (s != BS_OK) {
        throw Failure{exit_code_for(s), std::string(bs_status_name(s)) + ": " + bs_last_error()};
    }
}

template <class T, void (*Free)(T *)>
struct Deleter {
    void operator()(T *p) const { Free(p); }
};
using Matrix = std::unique_ptr<bs_matrix, Deleter<bs_matrix, bs_matrix_free>>;
using Jsa = std::unique_ptr<bs_jsa, Deleter<bs_jsa, bs_jsa_free>>;
using GhzRun = std::unique_ptr<bs_ghz_run, Deleter<bs_ghz_run, bs_ghz_run_free>>;
using Records = std::unique_ptr<bs_records, Deleter<bs_records, bs_records_free>>;
using Scattershot = std::unique_ptr<bs_scattershot, Deleter<bs_scattershot, bs_scattershot_free>>;
using Validation = std::unique_ptr<bs_validation, Deleter<bs_validation, bs_validation_free>>;

std::string num(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// Ordered key/value lines. Used both for file headers ("# k: v") and for
/// report bodies ("k: v").
class Fields {
   public:
    Fields &add(const std::string &k, const std::string &v) {
        rows_.emplace_back(k, v);
        return *this;
    }
    Fields &add(const std::string &k, const char *v) { return add(k, std::string(v)); }
    Fields &add(const std::string &k, double v) { return add(k, num(v)); }
    Fields &add(const std::string &k, std::uint64_t v) { return add(k, std::to_string(v)); }
    Fields &add(const std::string &k, unsigned v) { return add(k, std::to_string(v)); }
    Fields &add(const std::string &k, bool v) { return add(k, std::string(v ? "true" : "false")); }

    std::string text(const char *prefix = "") const {
        std::string out;
        for (const auto &[k, v] : rows_) {
            out += prefix + k + ": " + v + "\n";
        }
        return out;
    }

   private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

struct Globals {
    std::uint64_t seed = 1;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string out;
};

Fields header(const Globals &g, const std::string &command) {
    Fields f;
    f.add("bosonsim", std::string(bs_version())).add("command", command).add("seed", g.seed);
    return f;
}

void emit(const Globals &g, const std::string &text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    f << text;
    f.close();
    if (!f) {
        throw Failure{kExitIo, "cannot write " + g.out};
    }
}

bs_hypothesis parse_hypothesis(const std::string &s) {
    return s == "distinguishable" ? BS_DISTINGUISHABLE : BS_INDISTINGUISHABLE;
}

const char *hypothesis_name(bs_hypothesis h) {
    return h == BS_DISTINGUISHABLE ? "distinguishable" : "indistinguishable";
}

// Unitary selection shared by sample, scattershot and validate.
struct UnitaryOptions {
    std::string file;
    std::size_t modes = 12;
    std::uint64_t seed_offset = 0;

    void attach(CLI::App *cmd, bool allow_haar) {
        cmd->add_option("--unitary", file, "Matrix file with the interferometer unitary");
        if (allow_haar) {
            cmd->add_option("--modes", modes, "Modes of the Haar-random unitary used when --unitary is absent")
                ->capture_default_str()
                ->check(CLI::PositiveNumber);
        }
    }

    Matrix load(const Globals &g, Fields &hdr) const {
        bs_matrix *m = nullptr;
        if (!file.empty()) {
            check(bs_matrix_load(file.c_str(), &m));
            hdr.add("unitary", file);
        } else {
            check(bs_matrix_haar(modes, g.seed, &m));
            hdr.add("unitary", "haar").add("modes", static_cast<std::uint64_t>(modes));
        }
        return Matrix(m);
    }
};

// permanent

struct PermanentCmd {
    std::string file;
    std::string method = "ryser";

    void attach(CLI::App &app, Globals &g) {
        auto *cmd = app.add_subcommand("permanent", "Permanent of a square matrix file");
        cmd->add_option("matrix", file, "Matrix file")->required();
        cmd->add_option("--method", method, "naive, ryser or parallel")
            ->capture_default_str()
            ->check(CLI::IsMember({"naive", "ryser", "parallel"}));
        cmd->callback([this, &g] { run(g); });
    }

    void run(const Globals &g) {
        bs_matrix *raw = nullptr;
        check(bs_matrix_load(file.c_str(), &raw));
        Matrix m(raw);
        auto kind = method == "naive" ? BS_PERMANENT_NAIVE : method == "parallel" ? BS_PERMANENT_PARALLEL : BS_PERMANENT_RYSER;
        double re = 0, im = 0;
        auto start = std::chrono::steady_clock::now();
        check(bs_permanent(m.get(), kind, g.threads, &re, &im));
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        auto hdr = header(g, "permanent");
        hdr.add("matrix", file).add("method", method).add("threads", g.threads);
        Fields body;
        body.add("n", static_cast<std::uint64_t>(bs_matrix_rows(m.get()))).add("re", re).add("im", im);
        std::string value = num(re) + (im < 0 ? "-" : "+") + num(std::abs(im)) + "i";
        body.add("permanent", value);
        if (g.out.empty()) {
            std::cout << hdr.text("# ") << body.text();
        } else {
            emit(g, hdr.text("# ") + body.text());
            std::cout << "permanent: " << value << "\n";
        }
        // Timing is reported on the terminal only so output files stay reproducible.
        std::cout << "wall_time_s: " << num(secs) << "\n";
    }
};

// unitary

struct UnitaryCmd {
    std::size_t modes = 12;

    void attach(CLI::App &app, Globals &g) {
        auto *cmd = app.add_subcommand("unitary", "Write a seeded Haar-random unitary");
        cmd->add_option("--modes", modes, "Matrix dimension")->capture_default_str()->check(CLI::PositiveNumber);
        cmd->callback([this, &g] { run(g); });
    }

    void run(const Globals &g) {
        if (g.out.empty()) {
            throw Failure{kExitUsage, "unitary: --out is required"};
        }
        bs_matrix *raw = nullptr;
        check(bs_matrix_haar(modes, g.seed, &raw));
        Matrix m(raw);
        auto hdr = header(g, "unitary");
        hdr.add("modes", static_cast<std::uint64_t>(modes));
        check(bs_matrix_save(m.get(), g.out.c_str(), hdr.text().c_str()));
    }
};

// sample

struct SampleCmd {
    UnitaryOptions unitary;
    std::string input;
    std::uint64_t shots = 1000;
    std::string hypothesis = "indistinguishable";
    bool collisions = false;

    void attach(CLI::App &app, Globals &g) {
        auto *cmd = app.add_subcommand("sample", "Standard boson sampling from a fixed input");
        unitary.attach(cmd, true);
        cmd->add_option("--input", input, "Input occupation string, e.g. 111000000000")->required();
        cmd->add_option("--shots", shots, "Number of samples")->capture_default_str();
        cmd->add_option("--hypothesis", hypothesis, "indistinguishable or distinguishable")
            ->capture_default_str()
            ->check(CLI::IsMember({"indistinguishable", "distinguishable"}));
        cmd->add_flag("--collisions", collisions, "Keep collision outcomes instead of post-selecting on them");
        cmd->callback([this, &g] { run(g); });
    }

    void run(const Globals &g) {
        auto hdr = header(g, "sample");
        auto u = unitary.load(g, hdr);
        hdr.add("input", input).add("shots", shots).add("hypothesis", hypothesis).add("collisions", collisions);
        bs_records *raw = nullptr;
        check(bs_sample_standard(u.get(), input.c_str(), shots, parse_hypothesis(hypothesis), collisions, g.seed, &raw));
        Records r(raw);
        save_records(g, r.get(), hdr);
    }

    static void save_records(const Globals &g, const bs_records *r, const Fields &hdr) {
        if (g.out.empty()) {
            std::cout << hdr.text("# ") << "pulse_index,trigger_pattern,input_pattern,output_pattern\n";
            std::vector<char> t(64), in(64), out(64);
            for (std::size_t i = 0; i < bs_records_count(r); i++) {
                std::uint64_t pulse = 0;
                check(bs_records_get(r, i, &pulse, t.data(), in.data(), out.data(), t.size()));
                std::cout << pulse << ',' << t.data() << ',' << in.data() << ',' << out.data() << '\n';
            }
            return;
        }
        check(bs_records_save(r, g.out.c_str(), hdr.text().c_str()));
    }
};

// scattershot

struct ScattershotCmd {
    UnitaryOptions unitary;
    std::string sources_file;
    double epsilon = 0.01;
    double eta_herald = 0.5;
    double eta_detect = 1.0;
    double rep_rate = 80e6;
    std::uint64_t pulses = 1'000'000;
    unsigned n = 3;
    std::string report;

    void attach(CLI::App &app, Globals &g) {
        auto *cmd = app.add_subcommand("scattershot", "Scattershot boson sampling over one source per mode");
        unitary.attach(cmd, true);
        cmd->add_option("--sources", sources_file, "Source config file (JSON)");
        cmd->add_option("--epsilon", epsilon, "Pair probability per pulse for every source")->capture_default_str();
        cmd->add_option("--eta-herald", eta_herald, "Heralding efficiency for every source")->capture_default_str();
        cmd->add_option("--eta-detect", eta_detect, "Detector efficiency for every source")->capture_default_str();
        cmd->add_option("--rep-rate", rep_rate, "Pulse repetition rate in Hz")->capture_default_str();
        cmd->add_option("--pulses", pulses, "Number of pump pulses")->capture_default_str();
        cmd->add_option("--n", n, "Photon number to post-select")->capture_default_str();
        cmd->add_option("--report", report, "Write the rate report here instead of stdout");
        cmd->callback([this, &g] { run(g); });
    }

    void run(const Globals &g) {
        auto hdr = header(g, "scattershot");
        auto u = unitary.load(g, hdr);
        std::size_t k = bs_matrix_rows(u.get());
        std::vector<bs_source_params> sources;
        if (!sources_file.empty()) {
            std::size_t count = 0;
            check(bs_sources_load(sources_file.c_str(), nullptr, 0, &count));
            sources.resize(count);
            check(bs_sources_load(sources_file.c_str(), sources.data(), sources.size(), &count));
            hdr.add("sources", sources_file);
        } else {
            sources.assign(k, bs_source_params{epsilon, eta_herald, eta_detect, 1.0, rep_rate});
            hdr.add("epsilon", epsilon).add("eta_herald", eta_herald).add("eta_detect", eta_detect).add("rep_rate", rep_rate);
        }
        hdr.add("k", static_cast<std::uint64_t>(sources.size())).add("pulses", pulses).add("n", n);

        bs_scattershot *raw = nullptr;
        check(bs_scattershot_run(u.get(), sources.data(), sources.size(), pulses, n, g.seed, g.threads, &raw));
        Scattershot s(raw);
        bs_rate_report r{};
        check(bs_scattershot_report(s.get(), &r));

        Fields body;
        body.add("n", r.n)
            .add("retained_events", r.retained_events)
            .add("pulses", r.pulses)
            .add("rate_hz", r.rate_hz)
            .add("predicted_rate_hz", r.predicted_rate_hz)
            .add("herald_events", r.herald_events)
            .add("herald_rate_hz", r.herald_rate_hz)
            .add("predicted_herald_rate_hz", r.predicted_herald_rate_hz)
            .add("distinct_trigger_patterns", r.distinct_trigger_patterns)
            .add("combinations", r.combinations);
        std::string hist;
        for (std::size_t i = 0; i < r.herald_histogram_size; i++) {
            hist += (i ? " " : "") + std::to_string(r.herald_histogram[i]);
        }
        body.add("herald_histogram", hist);
        std::string report_text = hdr.text("# ") + body.text();

        if (!g.out.empty()) {
            check(bs_records_save(bs_scattershot_records(s.get()), g.out.c_str(), hdr.text().c_str()));
        }
        if (report.empty()) {
            std::cout << report_text;
        } else {
            emit(Globals{g.seed, g.threads, report}, report_text);
        }
    }
};

// ghz

struct GhzCmd {
    unsigned photons = 12;
    double population = 0.732;
    double coherence = 0.419;
    std::uint64_t shots = 100000;
    std::string summary;

    void attach(CLI::App &app, Globals &g) {
        auto *cmd = app.add_subcommand("ghz", "Simulate the GHZ population and coherence measurements");
        cmd->add_option("--photons", photons, "Photon number N")->capture_default_str();
        cmd->add_option("--population", population, "Population P")->capture_default_str();
        cmd->add_option("--coherence", coherence, "Coherence C")->capture_default_str();
        cmd->add_option("--shots", shots, "Shots per measurement setting")->capture_default_str();
        cmd->add_option("--summary", summary, "Write the summary here instead of stdout");
        cmd->callback([this, &g] { run(g); });
    }

    void run(const Globals &g) {
        bs_ghz_model model{photons, population, coherence};
        bs_ghz_run *raw = nullptr;
        check(bs_ghz_simulate(&model, shots, g.seed, &raw));
        GhzRun run(raw);

        auto hdr = header(g, "ghz");
        hdr.add("photons", photons).add("population", population).add("coherence", coherence).add("shots", shots);

        std::string csv = hdr.text("# ") + "basis,outcome,count\n";
        for (std::size_t s = 0; s < bs_ghz_run_setting_count(run.get()); s++) {
            const char *label = nullptr;
            std::size_t outcomes = 0;
            check(bs_ghz_run_setting(run.get(), s, &label, &outcomes));
            for (std::size_t i = 0; i < outcomes; i++) {
                const char *outcome = nullptr;
                std::uint64_t count = 0;
                check(bs_ghz_run_outcome(run.get(), s, i, &outcome, &count));
                csv += std::string(label) + "," + outcome + "," + std::to_string(count) + "\n";
            }
        }

        bs_ghz_summary sm{};
        check(bs_ghz_run_summary(run.get(), &sm));
        Fields body;
        body.add("population", sm.population)
            .add("population_sigma", sm.population_sigma)
            .add("coherence", sm.coherence)
            .add("coherence_sigma", sm.coherence_sigma)
            .add("fidelity", sm.fidelity)
            .add("fidelity_sigma", sm.fidelity_sigma)
            .add("genuine", sm.genuine != 0)
            .add("significance", sm.significance);
        std::string summary_text = hdr.text("# ") + body.text();

        if (g.out.empty()) {
            std::cout << csv;
        } else {
            emit(g, csv);
        }
        if (summary.empty()) {
            std::cout << (g.out.empty() ? "\n" : "") << summary_text;
        } else {
            emit(Globals{g.seed, g.threads, summary}, summary_text);
        }
    }
};

// hom

struct HomCmd {
    double visibility = 0.962;
    double sigma = 1.0;
    double tau_max = 4.0;
    unsigned points = 81;

    void attach(CLI::App &app, Globals &g) {
        auto *cmd = app.add_subcommand("hom", "Two-photon interference dip as CSV of delay and coincidence");
        cmd->add_option("--visibility", visibility, "Dip visibility")->capture_default_str();
        cmd->add_option("--sigma", sigma, "Inverse coherence time")->capture_default_str();
        cmd->add_option("--tau-max", tau_max, "Scan from -tau-max to +tau-max")->capture_default_str();
        cmd->add_option("--points", points, "Number of delay points")->capture_default_str()->check(CLI::Range(2u, 1000000u));
        cmd->callback([this, &g] { run(g); });
    }

    void run(const Globals &g) {
        auto hdr = header(g, "hom");
        hdr.add("visibility", visibility).add("sigma", sigma).add("tau_max", tau_max).add("points", points);
        std::string csv = hdr.text("# ") + "tau,coincidence\n";
        for (unsigned i = 0; i < points; i++) {
            double tau = -tau_max + 2.0 * tau_max * i / (points - 1);
            double c = 0;
            check(bs_hom_dip(visibility, sigma, tau, &c));
            csv += num(tau) + "," + num(c) + "\n";
        }
        emit(g, csv);
    }
};

// jsa

struct JsaCmd {
    double sigma_pump = std::sqrt(2.0);
    double sigma_pm = 1.0;
    std::optional<double> angle;
    std::optional<double> target_purity;
    std::size_t grid = 256;
    double span = 8.0;

    void attach(CLI::App &app, Globals &g) {
        auto *cmd = app.add_subcommand("jsa", "Gaussian joint spectral amplitude and its Schmidt purity");
        cmd->add_option("--sigma-pump", sigma_pump, "Pump envelope width")->capture_default_str();
        cmd->add_option("--sigma-pm", sigma_pm, "Phase-matching envelope width")->capture_default_str();
        auto *a = cmd->add_option("--angle", angle, "Phase-matching angle in radians");
        cmd->add_option("--target-purity", target_purity, "Fit the angle to this purity")->excludes(a);
        cmd->add_option("--grid", grid, "Grid points per axis")->capture_default_str();
        cmd->add_option("--span", span, "Half-width of the detuning window")->capture_default_str();
        cmd->callback([this, &g] { run(g); });
    }

    void run(const Globals &g) {
        double theta = -M_PI / 4;
        if (target_purity) {
            check(bs_jsa_fit_angle(*target_purity, sigma_pump, sigma_pm, grid, span, &theta));
        } else if (angle) {
            theta = *angle;
        }
        bs_jsa *raw = nullptr;
        check(bs_jsa_gaussian(sigma_pump, sigma_pm, theta, grid, span, &raw));
        Jsa jsa(raw);
        double purity = 0, visibility = 0;
        check(bs_jsa_purity(jsa.get(), &purity));
        check(bs_jsa_predicted_visibility(jsa.get(), &visibility));

        auto hdr = header(g, "jsa");
        hdr.add("sigma_pump", sigma_pump).add("sigma_pm", sigma_pm).add("angle", theta);
        if (target_purity) {
            hdr.add("target_purity", *target_purity);
        }
        hdr.add("grid", static_cast<std::uint64_t>(grid)).add("span", span);
        if (!g.out.empty()) {
            auto meta = hdr;
            meta.add("purity", purity);
            check(bs_jsa_save(jsa.get(), g.out.c_str(), meta.text().c_str()));
        }
        Fields body;
        body.add("angle", theta)
            .add("purity", purity)
            .add("predicted_visibility", visibility)
            .add("nu_step", bs_jsa_nu_step(jsa.get()))
            .add("truncated", bs_jsa_truncated(jsa.get()) != 0);
        std::cout << hdr.text("# ") << body.text();
    }
};

// validate

struct ValidateCmd {
    std::string samples;
    UnitaryOptions unitary;
    std::string hypothesis = "distinguishable";
    double threshold = 5.0;
    bool collisions = false;
    std::string trajectory;

    void attach(CLI::App &app, Globals &g) {
        auto *cmd = app.add_subcommand("validate", "Validate a sample log against the indistinguishable-photon model");
        cmd->add_option("--samples", samples, "Sample log CSV")->required();
        unitary.attach(cmd, false);
        cmd->add_option("--hypothesis", hypothesis, "Alternative hypothesis for the likelihood-ratio test")
            ->capture_default_str()
            ->check(CLI::IsMember({"indistinguishable", "distinguishable"}));
        cmd->add_option("--threshold", threshold, "Log-likelihood decision threshold")->capture_default_str();
        cmd->add_flag("--collisions", collisions, "Compare against the collision-allowed distributions");
        cmd->add_option("--trajectory", trajectory, "Write the cumulative log-likelihood ratio as CSV");
        cmd->callback([this, &g] { run(g); });
    }

    void run(const Globals &g) {
        if (unitary.file.empty()) {
            throw Failure{kExitUsage, "validate: --unitary is required"};
        }
        auto hdr = header(g, "validate");
        hdr.add("samples", samples);
        auto u = unitary.load(g, hdr);
        hdr.add("hypothesis", hypothesis).add("threshold", threshold).add("collisions", collisions);

        bs_records *rraw = nullptr;
        check(bs_records_load(samples.c_str(), &rraw));
        Records records(rraw);
        bs_validation *vraw = nullptr;
        check(bs_validate(records.get(), u.get(), parse_hypothesis(hypothesis), threshold, collisions, &vraw));
        Validation v(vraw);
        bs_validation_summary s{};
        check(bs_validation_summary_get(v.get(), &s));

        Fields body;
        body.add("groups", static_cast<std::uint64_t>(s.groups))
            .add("similarity", s.mean_similarity)
            .add("similarity_sd", s.sd_similarity)
            .add("distance", s.mean_distance)
            .add("distance_sd", s.sd_distance)
            .add("pooled_similarity", s.pooled_similarity)
            .add("pooled_distance", s.pooled_distance)
            .add("log_likelihood_ratio", s.final_log_ratio)
            .add("verdict", std::string(bs_verdict_name(s.verdict)))
            .add("samples_used", s.samples_used)
            .add("skipped_collisions", s.skipped_collisions)
            .add("null_hypothesis", std::string(hypothesis_name(BS_INDISTINGUISHABLE)));
        std::string text = hdr.text("# ") + body.text() + "\ninput,samples,similarity,distance\n";
        std::vector<char> buf(64);
        for (std::size_t i = 0; i < s.groups; i++) {
            std::uint64_t n = 0;
            double sim = 0, dist = 0;
            check(bs_validation_group(v.get(), i, buf.data(), buf.size(), &n, &sim, &dist));
            text += std::string(buf.data()) + "," + std::to_string(n) + "," + num(sim) + "," + num(dist) + "\n";
        }
        emit(g, text);

        if (!trajectory.empty()) {
            std::string csv = hdr.text("# ") + "sample,log_likelihood_ratio\n";
            const double *t = bs_validation_trajectory(v.get());
            for (std::size_t i = 0; i < bs_validation_trajectory_size(v.get()); i++) {
                csv += std::to_string(i + 1) + "," + num(t[i]) + "\n";
            }
            emit(Globals{g.seed, g.threads, trajectory}, csv);
        }
    }
};

// rates

struct RatesCmd {
    unsigned k = 12;
    unsigned n = 3;
    double epsilon = 0.01;
    double eta = 0.5;
    double rep_rate = 80e6;
    bool scattershot = false;

    void attach(CLI::App &app, Globals &g) {
        auto *cmd = app.add_subcommand("rates", "Closed-form n-photon event rates");
        cmd->add_option("--k", k, "Number of sources")->capture_default_str();
        cmd->add_option("--n", n, "Photon number")->capture_default_str();
        cmd->add_option("--epsilon", epsilon, "Pair probability per pulse")->capture_default_str();
        cmd->add_option("--eta", eta, "Overall per-photon efficiency")->capture_default_str();
        cmd->add_option("--rep-rate", rep_rate, "Pulse repetition rate in Hz")->capture_default_str();
        cmd->add_flag("--scattershot", scattershot, "Include the scattershot rate and enhancement");
        cmd->callback([this, &g] { run(g); });
    }

    void run(const Globals &g) {
        auto hdr = header(g, "rates");
        hdr.add("k", k).add("n", n).add("epsilon", epsilon).add("eta", eta).add("rep_rate", rep_rate).add("scattershot", scattershot);
        double standard = 0;
        check(bs_expected_rate(k, n, epsilon, eta, rep_rate, 0, &standard));
        Fields body;
        body.add("n", n).add("standard_rate_hz", standard);
        if (scattershot) {
            double rate = 0;
            check(bs_expected_rate(k, n, epsilon, eta, rep_rate, 1, &rate));
            body.add("combinations", bs_binomial(k, n)).add("scattershot_rate_hz", rate);
            body.add("enhancement", standard > 0 ? rate / standard : 0.0);
        }
        emit(g, hdr.text("# ") + body.text());
    }
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Boson sampling, GHZ and SPDC source simulation"};
    app.set_version_flag("--version", std::string(bs_version()));
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML or INI file with option values; flags on the command line win");

    Globals g;
    app.add_option("--seed", g.seed, "Root random seed")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker thread cap")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "Output file");

    PermanentCmd permanent;
    UnitaryCmd unitary;
    SampleCmd sample;
    ScattershotCmd scattershot;
    GhzCmd ghz;
    HomCmd hom;
    JsaCmd jsa;
    ValidateCmd validate;
    RatesCmd rates;
    permanent.attach(app, g);
    unitary.attach(app, g);
    sample.attach(app, g);
    scattershot.attach(app, g);
    ghz.attach(app, g);
    hom.attach(app, g);
    jsa.attach(app, g);
    validate.attach(app, g);
    rates.attach(app, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::FileError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const Failure &f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
