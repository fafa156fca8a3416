// Copyright 2026 The rksim Authors
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

#include "rksim/commands.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "rksim/dynamics.h"
#include "rksim/lattice.h"
#include "rksim/observables.h"
#include "rksim/simulator.h"

namespace rksim {

namespace {

using nlohmann::json;

VerifyCheck make_check(std::string name, bool passed, std::string detail) {
    return VerifyCheck{std::move(name), passed ? "pass" : "fail", std::move(detail)};
}

// L_1 = 1, L_2 = 3, L_n = L_{n-1} + L_{n-2}.
std::uint64_t lucas(size_t n) {
    std::uint64_t a = 2, b = 1;
    for (size_t k = 0; k < n; k++) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

VerifyCheck check_config_count(size_t n, const ReductionReport &report) {
    std::uint64_t expected = n == 2 ? 3 : lucas(n);
    return make_check("config_count", report.n_configs == expected,
                      "n_configs=" + std::to_string(report.n_configs) + " lucas=" + std::to_string(expected));
}

VerifyCheck check_projection(size_t n, const EffectiveHamiltonian &h, const Eigen::MatrixXd &config) {
    Eigen::MatrixXd s = Eigen::MatrixXd(symmetrizer(n, h.basis));
    double err = (s.transpose() * config * s - h.matrix).cwiseAbs().maxCoeff();
    double ortho = (s.transpose() * s - Eigen::MatrixXd::Identity(s.cols(), s.cols())).cwiseAbs().maxCoeff();
    return make_check("projection", err <= 1e-10 && ortho <= 1e-12,
                      "max|S^T H S - H_eff|=" + format_double(err) + " max|S^T S - 1|=" + format_double(ortho));
}

VerifyCheck check_spectrum(size_t n, const EffectiveHamiltonian &h, const Eigen::MatrixXd &config) {
    if (n > kMaxSpinPlaquettes) {
        return VerifyCheck{"spectrum_containment", "skipped", "N > " + std::to_string(kMaxSpinPlaquettes)};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(config, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> reduced(h.matrix, Eigen::EigenvaluesOnly);
    double worst = 0.0;
    for (Eigen::Index k = 0; k < reduced.eigenvalues().size(); k++) {
        double e = reduced.eigenvalues()(k);
        worst = std::max(worst, (full.eigenvalues().array() - e).abs().minCoeff());
    }
    return make_check("spectrum_containment", worst <= 1e-9, "max distance=" + format_double(worst));
}

VerifyCheck check_spin_model(size_t n, const Eigen::MatrixXd &config) {
    if (n % 2 != 0 || n > kMaxSpinPlaquettes) {
        return VerifyCheck{"spin_bijection", "skipped", "requires even N <= " + std::to_string(kMaxSpinPlaquettes)};
    }
    LadderGeometry geometry(n);
    SpinState reference = build_reference_state(geometry);
    auto states = reachable_states(reference);
    auto configs = enumerate_configs(n);
    if (states.size() != configs.size()) {
        return make_check("spin_bijection", false,
                          "reachable=" + std::to_string(states.size()) + " configs=" + std::to_string(configs.size()));
    }
    std::unordered_map<std::uint32_t, Eigen::Index> config_index;
    for (size_t k = 0; k < configs.size(); k++) {
        config_index[configs[k].bits()] = static_cast<Eigen::Index>(k);
    }
    std::vector<Eigen::Index> image(states.size());
    std::vector<bool> hit(configs.size(), false);
    for (size_t k = 0; k < states.size(); k++) {
        if (!gauss_charges(states[k]).all_zero()) {
            return make_check("spin_bijection", false, "Gauss law violated by " + states[k].str());
        }
        auto it = config_index.find(flipped_plaquettes(states[k], reference));
        if (it == config_index.end() || hit[it->second]) {
            return make_check("spin_bijection", false, "state " + states[k].str() + " has no unique image");
        }
        hit[it->second] = true;
        image[k] = it->second;
    }
    Eigen::MatrixXd spin = spin_hamiltonian(states, 1.0, 1.0);
    double err = 0.0;
    for (size_t a = 0; a < states.size(); a++) {
        for (size_t b = 0; b < states.size(); b++) {
            err = std::max(err, std::abs(spin(a, b) - config(image[a], image[b])));
        }
    }
    return make_check("spin_bijection", err <= 1e-12,
                      "states=" + std::to_string(states.size()) + " max|H_spin - H_config|=" + format_double(err));
}

VerifyCheck check_discrepancies(const ReductionReport &report) {
    size_t unexplained = 0;
    for (const auto &d : report.discrepancies) {
        unexplained += d.confirmed ? 0 : 1;
    }
    return make_check("discrepancies_confirmed", unexplained == 0,
                      std::to_string(report.discrepancies.size()) + " flagged, " + std::to_string(unexplained) +
                          " unexplained");
}

std::string observable_backend_tag(const std::string &backend, TrotterMode mode) {
    if (backend == "noisy") {
        return mode == TrotterMode::Native ? "noisy_native" : "noisy_scaled";
    }
    return backend;
}

// Estimates for one backend, indexed [step][observable].
using Series = std::vector<std::vector<Estimate>>;

struct RunContext {
    const RunConfig &config;
    EffectiveHamiltonian h;
    std::vector<std::vector<double>> values;
    size_t steps;
};

Estimate estimate(std::span<const double> probs, std::span<const double> values) {
    return expect_diagonal(probs, values);
}

Series run_exact(const RunContext &ctx) {
    ExactEvolver evolver(ctx.h.matrix);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(ctx.h.dim()));
    psi0(0) = 1.0;
    Series out(ctx.steps + 1);
    for (size_t k = 0; k <= ctx.steps; k++) {
        auto probs = probabilities(evolver.evolve(psi0, static_cast<double>(k) * ctx.config.dt));
        for (const auto &v : ctx.values) {
            out[k].push_back(estimate(probs, v));
        }
    }
    return out;
}

Circuit trotter_step(const RunContext &ctx) {
    auto d = decompose(embed(ctx.h));
    return synthesize_trotter(d, ctx.config.dt, 1, ctx.config.trotter_mode);
}

Series run_ideal_backend(const RunContext &ctx) {
    Circuit step = trotter_step(ctx);
    StateVector psi = StateVector::basis(step.qubits());
    Series out(ctx.steps + 1);
    for (size_t k = 0; k <= ctx.steps; k++) {
        if (k > 0) {
            psi = run_ideal(step, psi);
        }
        auto probs = psi.probabilities();
        for (const auto &v : ctx.values) {
            out[k].push_back(estimate(probs, v));
        }
    }
    return out;
}

Series run_noisy_backend(const RunContext &ctx) {
    Circuit step = trotter_step(ctx);
    size_t q = step.qubits();
    Eigen::Index dim = Eigen::Index{1} << q;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    rho(0, 0) = 1.0;
    const NoiseModel &noise = ctx.config.noise;
    Series out(ctx.steps + 1);
    for (size_t k = 0; k <= ctx.steps; k++) {
        if (k > 0) {
            propagate_noisy(rho, q, step, noise);
        }
        std::vector<double> probs(static_cast<size_t>(dim));
        for (Eigen::Index i = 0; i < dim; i++) {
            probs[static_cast<size_t>(i)] = std::max(0.0, rho(i, i).real());
        }
        probs = apply_readout_error(probs, q, noise.p_readout);
        auto rng = task_rng(ctx.config.seed, k);
        Counts counts = sample_counts(probs, q, noise.shots, rng);
        for (const auto &v : ctx.values) {
            out[k].push_back(expect_diagonal(counts, v));
        }
    }
    return out;
}

template <typename F>
void parallel_for(size_t n, F &&fn) {
    size_t workers = std::min(n, worker_limit());
    if (workers <= 1) {
        for (size_t k = 0; k < n; k++) {
            fn(k);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            for (size_t k = next++; k < n; k = next++) {
                try {
                    fn(k);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

size_t worker_limit() {
    if (const char *env = std::getenv("RKSIM_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<size_t>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

bool VerifyResult::ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const VerifyCheck &c) {
        return c.status == "fail";
    });
}

json VerifyResult::to_json() const {
    json checks_json = json::array();
    for (const auto &c : checks) {
        checks_json.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    }
    return json{{"ok", ok()}, {"report", report.to_json()}, {"checks", checks_json}};
}

VerifyResult cmd_verify(size_t n) {
    if (n > kMaxVerifyPlaquettes) {
        throw std::invalid_argument("verify supports at most " + std::to_string(kMaxVerifyPlaquettes) +
                                    " plaquettes");
    }
    VerifyResult result{reduction_report(n), {}};
    auto h = build_effective_hamiltonian(n, 1.0, 1.0);
    Eigen::MatrixXd config = Eigen::MatrixXd(config_space_hamiltonian(n, 1.0, 1.0));
    result.checks.push_back(check_config_count(n, result.report));
    result.checks.push_back(check_projection(n, h, config));
    result.checks.push_back(check_spectrum(n, h, config));
    result.checks.push_back(check_spin_model(n, config));
    result.checks.push_back(check_discrepancies(result.report));
    return result;
}

PauliDecomposition cmd_pauli(size_t n, double lambda, double j, double threshold) {
    return decompose(embed(build_effective_hamiltonian(n, j, lambda)), threshold);
}

SynthResult cmd_synth(size_t n, double lambda, double dt, TrotterMode mode, size_t n_steps, double j) {
    auto d = cmd_pauli(n, lambda, j);
    Circuit c = synthesize_trotter(d, dt, n_steps, mode);
    GateCounts counts = count_gates(c);
    return SynthResult{std::move(c), counts, d.terms.size()};
}

std::string TimeSeries::to_csv() const {
    std::ostringstream out;
    out << "# seed=" << config.seed << " n_plaquettes=" << config.n_plaquettes
        << " lambda=" << format_double(config.lambda) << " j_coupling=" << format_double(config.j_coupling)
        << " dt=" << format_double(config.dt) << " t_max=" << format_double(config.t_max)
        << " trotter_mode=" << trotter_mode_name(config.trotter_mode) << "\n";
    out << "t,backend,observable,value,stderr,discard_fraction\n";
    for (const auto &r : rows) {
        out << format_double(r.t) << ',' << r.backend << ',' << r.observable << ',' << format_double(r.value) << ','
            << format_double(r.std_error) << ',' << format_double(r.discard_fraction) << '\n';
    }
    return out.str();
}

json TimeSeries::to_json() const {
    json rows_json = json::array();
    for (const auto &r : rows) {
        rows_json.push_back({{"t", r.t},
                             {"backend", r.backend},
                             {"observable", r.observable},
                             {"value", r.value},
                             {"stderr", r.std_error},
                             {"discard_fraction", r.discard_fraction}});
    }
    return json{{"seed", config.seed}, {"config", config.to_json()}, {"rows", rows_json}};
}

std::string TimeSeries::gnuplot_script(const std::string &csv_path) const {
    std::vector<std::pair<std::string, std::string>> curves;
    for (const auto &r : rows) {
        std::pair<std::string, std::string> key{r.backend, r.observable};
        if (std::find(curves.begin(), curves.end(), key) == curves.end()) {
            curves.push_back(key);
        }
    }
    std::ostringstream out;
    out << "set datafile separator ','\n";
    out << "set xlabel 't J'\n";
    out << "set key outside right\n";
    out << "plot \\\n";
    for (size_t k = 0; k < curves.size(); k++) {
        const auto &[backend, observable] = curves[k];
        out << "  '" << csv_path << "' skip 2 using 1:(strcol(2) eq '" << backend << "' && strcol(3) eq '"
            << observable << "' ? $4 : NaN) with linespoints title '" << backend << " " << observable << "'"
            << (k + 1 < curves.size() ? ", \\\n" : "\n");
    }
    return out.str();
}

TimeSeries cmd_run(const RunConfig &config) {
    config.validate();
    RunContext ctx{config, build_effective_hamiltonian(config.n_plaquettes, config.j_coupling, config.lambda), {},
                   grid_steps(config.dt, config.t_max)};
    for (const auto &name : config.observables) {
        size_t r = observable_distance(name);
        ctx.values.push_back(r == 0 ? flippable_values(ctx.h.basis)
                                    : correlation_values(ctx.h.basis, config.n_plaquettes, r));
    }

    std::vector<Series> series(config.backends.size());
    parallel_for(config.backends.size(), [&](size_t b) {
        const auto &name = config.backends[b];
        if (name == "exact") {
            series[b] = run_exact(ctx);
        } else if (name == "ideal") {
            series[b] = run_ideal_backend(ctx);
        } else {
            series[b] = run_noisy_backend(ctx);
        }
    });

    TimeSeries out{config, {}};
    for (size_t k = 0; k <= ctx.steps; k++) {
        double t = static_cast<double>(k) * config.dt;
        for (size_t b = 0; b < config.backends.size(); b++) {
            std::string tag = observable_backend_tag(config.backends[b], config.trotter_mode);
            for (size_t o = 0; o < config.observables.size(); o++) {
                const Estimate &e = series[b][k][o];
                out.rows.push_back(TimeSeriesRow{t, tag, config.observables[o], e.value, e.std_error,
                                                 e.discard_fraction});
            }
        }
    }
    return out;
}

std::vector<double> default_theta_grid() {
    std::vector<double> out;
    for (int k = 1; k <= 8; k++) {
        out.push_back(k * std::numbers::pi / 16);
    }
    return out;
}

std::vector<RzzFidelity> cmd_fidelity(const std::vector<double> &thetas, const NoiseModel &noise) {
    noise.validate();
    std::vector<RzzFidelity> out(thetas.size());
    parallel_for(thetas.size(), [&](size_t k) {
        out[k] = compare_rzz_fidelity(thetas[k], noise);
    });
    return out;
}

std::string fidelity_csv(const std::vector<RzzFidelity> &rows) {
    std::ostringstream out;
    out << "theta,F_avg_native,F_avg_scaled\n";
    for (const auto &r : rows) {
        out << format_double(r.theta) << ',' << format_double(r.native) << ',' << format_double(r.scaled) << '\n';
    }
    return out.str();
}

json fidelity_json(const std::vector<RzzFidelity> &rows) {
    json out = json::array();
    for (const auto &r : rows) {
        out.push_back({{"theta", r.theta}, {"F_avg_native", r.native}, {"F_avg_scaled", r.scaled}});
    }
    return out;
}

}  // namespace rksim
