// Copyright 2026 The readoutkit Authors
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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 only if every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "readoutkit/bench/comparison.h"
#include "readoutkit/circuit/mna.h"
#include "readoutkit/design/formulas.h"
#include "readoutkit/errors.h"
#include "readoutkit/fidelity/budget.h"
#include "readoutkit/fidelity/clouds.h"
#include "readoutkit/fidelity/curve.h"
#include "readoutkit/fidelity/efficiency.h"
#include "readoutkit/fidelity/window.h"
#include "readoutkit/readout/demux.h"
#include "readoutkit/readout/shots.h"
#include "readoutkit/units.h"
#include "test_support.h"

namespace {

using namespace readoutkit;
using cd = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string &what) {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string &what) {
        lines.push_back("info " + what);
    }
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

readout::ShotOptions reference_options(size_t shots, uint64_t seed) {
    readout::ShotOptions o;
    o.n_shots = shots;
    o.eta = 0.126;
    o.seed = seed;
    o.preparation = readout::Preparation::alternate;
    o.t_gap = 500e-9;
    o.series_bin = 10;
    return o;
}

// 1. Design point of the simplified product.
Outcome design_point() {
    Outcome o;
    double k = design::kappa_t1_simplified(kTwoPi * 0.8e9, kTwoPi * 90e6, kTwoPi * 6e9, kTwoPi * 6.8e9, 30);
    double t1 = k * 50e-9;
    o.check(std::abs(k / 5050 - 1) <= 0.01, fmt("kappa_r*T1 = %.1f, target 5050 +-1%%", k));
    o.check(std::abs(t1 / 250e-6 - 1) <= 0.02, fmt("T1 = %.1f us at 1/kappa_r = 50 ns, target 250 us +-2%%", t1 * 1e6));
    return o;
}

// 2. Analytic vs circuit T1 over |Delta|/2pi in [100 MHz, 1 GHz].
Outcome analytic_vs_numeric() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    bench::CanonicalChainSpec spec;
    auto grid = bench::detuning_grid_hz(100e6, 1e9, 100);
    std::vector<double> kappas = {1 / 12e-9, 1 / 23e-9, 1 / 35e-9, 1 / 71e-9};
    auto rows = bench::fig3_sweep(spec, grid, kappas);
    double elapsed = seconds_since(t0);
    double worst = 0, worst_delta = 0, worst_far = 0;
    size_t failing = 0, errors = 0;
    double lowest_failing = kInf;
    for (const auto &r : rows) {
        if (!r.ok()) {
            ++errors;
            continue;
        }
        if (r.rel_diff > worst) {
            worst = r.rel_diff;
            worst_delta = r.delta / kTwoPi;
        }
        if (r.rel_diff > 0.10) {
            ++failing;
            lowest_failing = std::min(lowest_failing, std::abs(r.delta / kTwoPi));
        }
        if (std::abs(r.delta / kTwoPi) >= 400e6) {
            worst_far = std::max(worst_far, r.rel_diff);
        }
    }
    o.check(errors == 0, fmt("%zu grid points solved, %zu solver errors", rows.size(), errors));
    o.check(failing == 0, fmt("max relative difference %.3f at Delta/2pi = %.0f MHz; %zu of %zu points exceed 10%%",
                              worst, worst_delta / 1e6, failing, rows.size()));
    if (failing > 0) {
        double largest_failing = 0;
        for (const auto &r : rows) {
            if (r.ok() && r.rel_diff > 0.10) {
                largest_failing = std::max(largest_failing, std::abs(r.delta / kTwoPi));
            }
        }
        o.note(fmt("failing points span |Delta|/2pi = %.0f to %.0f MHz", lowest_failing / 1e6, largest_failing / 1e6));
    }
    o.note(fmt("max relative difference for |Delta|/2pi >= 400 MHz: %.3f", worst_far));
    o.check(elapsed < 60, fmt("runtime %.1f s for a %zu x %zu grid, limit 60 s", elapsed, grid.size(), kappas.size()));
    return o;
}

// 3. Bare filter passband and qubit-frequency suppression.
Outcome passband() {
    Outcome o;
    bench::CanonicalChainSpec spec;
    std::vector<double> f(1001);
    for (size_t i = 0; i < f.size(); ++i) {
        f[i] = 4e9 + 5e9 * static_cast<double>(i) / 1000.0;
    }
    auto scan = bench::passband_scan(spec, f);
    o.check(std::abs(scan.fit.q / 30 - 1) <= 0.15,
            fmt("fitted Q = %.2f at f0 = %.4f GHz, target 30 +-15%%", scan.fit.q, scan.fit.f0_hz / 1e9));
    double suppression = 1 / bench::transmission_ratio(spec, 6.0e9, 6.8e9);
    o.check(suppression >= 25, fmt("|S21(6.8 GHz)|^2 / |S21(6.0 GHz)|^2 = %.1f, floor 25", suppression));
    return o;
}

// 4. Ring-down after the drive switches off.
Outcome ring_down() {
    Outcome o;
    auto q = rk_test::reference_qubit();
    auto p = rk_test::reference_program(q);
    p.tones[0].segments.push_back({200e-9, 0});
    auto alpha = readout::mean_amplitude(q, p, 0, 0);
    auto n = readout::photon_number(alpha);
    size_t off = static_cast<size_t>(std::llround(140e-9 / p.dt));
    std::vector<double> t, y;
    for (size_t k = off; k < n.size(); ++k) {
        t.push_back(static_cast<double>(k - off) * p.dt);
        y.push_back(n[k]);
    }
    double tau = rk_test::exponential_time_constant(t, y);
    double q_r = q.omega_r * tau;
    o.check(std::abs(tau * q.kappa - 1) <= 0.01, fmt("fitted ring-down time %.3f ns, 1/kappa_r = 37 ns +-1%%", tau * 1e9));
    o.check(std::abs(q_r / 1561 - 1) <= 0.02, fmt("implied Q_r = %.1f at 6.72 GHz, target 1561 +-2%%", q_r));
    o.note(fmt("photons at drive-off: %.1f", n[off]));
    return o;
}

// 5. Monte-Carlo saturation levels vs the analytic budget.
Outcome budget_closure() {
    Outcome o;
    auto b = fidelity::error_budget(10e-6, 1 / 100e-6, 140e-9, 500e-9);
    o.check(std::abs(b.eps_prep - 0.005) <= 0.0005, fmt("eps_prep = %.4f%%, expected 0.5%%", b.eps_prep * 100));
    o.check(std::abs(b.eps_decay - 0.007) <= 0.0005, fmt("eps_decay = %.4f%%, expected 0.7%%", b.eps_decay * 100));
    o.check(std::abs(b.f1_ceiling - 0.988) <= 0.0005, fmt("F|1> ceiling = %.4f%%, expected 98.8%%", b.f1_ceiling * 100));

    auto q = rk_test::reference_qubit(10e-6, 1 / 100e-6);
    auto p = rk_test::reference_program(q);
    const size_t shots = 100000;
    auto set = readout::simulate_shots({q}, p, reference_options(shots, 20240501));
    auto w = fidelity::bin_window(set, 0, fidelity::WindowMode::matched);
    auto pts = fidelity::labeled_points(set, 0, w);
    auto fit = fidelity::fit_clouds(pts.points, pts.labels);
    double e0 = fidelity::misassignment(fit, pts, 0);
    double e1 = fidelity::misassignment(fit, pts, 1);
    double half = static_cast<double>(shots) / 2;
    double p0 = 1 - b.f0_ceiling, p1 = 1 - b.f1_ceiling;
    double s0 = rk_test::binomial_sigma(p0, half), s1 = rk_test::binomial_sigma(p1, half);
    o.check(std::abs(e0 - p0) <= 3 * s0,
            fmt("eps|0> = %.3f%% vs ceiling deficit %.3f%% (3 sigma = %.3f%%)", e0 * 100, p0 * 100, 3 * s0 * 100));
    o.check(std::abs(e1 - p1) <= 3 * s1,
            fmt("eps|1> = %.3f%% vs ceiling deficit %.3f%% (3 sigma = %.3f%%)", e1 * 100, p1 * 100, 3 * s1 * 100));
    o.note(fmt("separation error at 140 ns with the matched window: %.2e", 1 - fidelity::separation_fidelity(fit)));
    return o;
}

// 6. Efficiency extraction round trip.
Outcome efficiency_round_trip() {
    Outcome o;
    auto q = rk_test::reference_qubit(kInf, 0);
    auto p = rk_test::reference_program(q);
    auto a0 = readout::mean_amplitude(q, p, 0, 0);
    auto a1 = readout::mean_amplitude(q, p, 0, 1);
    auto box = readout::boxcar_window(a0.size(), p.dt);
    double rho = fidelity::ideal_coherence(a0, a1, q.kappa, box, p.dt);
    o.note(fmt("|rho10| of the full-information record: %.4g", rho));
    uint64_t seed = 600;
    for (double eta : {0.126, 0.25, 0.5, 1.0}) {
        readout::ShotOptions opt;
        opt.n_shots = 100000;
        opt.eta = eta;
        opt.seed = seed++;
        opt.preparation = readout::Preparation::alternate;
        opt.series_bin = 0;
        auto set = readout::simulate_shots({q}, p, opt);
        auto pts = fidelity::labeled_points(set, 0);
        auto fit = fidelity::fit_clouds(pts.points, pts.labels);
        auto r = fidelity::extract_efficiency(fit, rho);
        o.check(std::abs(r.raw / eta - 1) <= 0.05, fmt("injected eta = %.3f, extracted %.4f (5%% band)", eta, r.raw));
    }
    return o;
}

// 7. Separation-fidelity geometry.
Outcome separation_geometry() {
    Outcome o;
    double r = fidelity::ratio_for_separation_fidelity(0.998);
    o.check(std::abs(r - 5.76) <= 0.005, fmt("F_s = 99.8%% <=> s/sigma = %.4f, expected 5.76", r));
    std::mt19937_64 rng(7);
    std::vector<cd> pts;
    std::vector<int> labels;
    for (int state : {0, 1}) {
        for (auto z : rk_test::gaussian_cloud(rng, state ? std::polar(5.76, 2.0) : cd{}, 1.0, 10000)) {
            pts.push_back(z);
            labels.push_back(state);
        }
    }
    auto fit = fidelity::fit_clouds(pts, labels);
    double fs = fidelity::separation_fidelity(fit);
    o.check(std::abs(fs - 0.998) <= 0.0005,
            fmt("synthetic clouds at s/sigma = 5.76: fitted F_s = %.4f%% (s/sigma = %.3f), target 99.8%% +-0.05%%",
                fs * 100, fit.snr()));
    return o;
}

// 8. Substituted time-domain properties.
Outcome time_domain_properties() {
    Outcome o;
    auto q = rk_test::reference_qubit(10e-6, 1 / 100e-6);
    auto p = rk_test::reference_program(q);
    auto set = readout::simulate_shots({q}, p, reference_options(100000, 8080));
    std::vector<double> grid;
    for (int i = 1; i <= 28; ++i) {
        grid.push_back(5e-9 * i);
    }
    auto curve = fidelity::fidelity_vs_time(set, 0, grid);
    std::vector<double> t, l;
    double crossing = kInf;
    for (size_t i = 0; i < grid.size(); ++i) {
        if (curve.degenerate[i]) {
            continue;
        }
        if (grid[i] >= 65e-9 && curve.eps_s[i] > 0) {
            t.push_back(grid[i]);
            l.push_back(std::log10(curve.eps_s[i]));
        }
        if (curve.eps_s[i] <= 0.01 && !std::isfinite(crossing)) {
            crossing = grid[i];
        }
    }
    double mt = 0, ml = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        mt += t[i] / t.size();
        ml += l[i] / t.size();
    }
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        sxy += (t[i] - mt) * (l[i] - ml);
        sxx += (t[i] - mt) * (t[i] - mt);
    }
    double ns_per_decade = -1e9 / (sxy / sxx);
    o.check(ns_per_decade >= 20 && ns_per_decade <= 35,
            fmt("boxcar eps_s falls one decade per %.1f ns over 65-140 ns, band 20-35 ns", ns_per_decade));
    o.check(std::isfinite(crossing), fmt("F_s crosses 99%% at %.0f ns, record 140 ns", crossing * 1e9));

    // Leakage between two constant tones 13 MHz apart.
    auto leak = [](double dt, size_t n, size_t tones) {
        std::vector<double> offsets;
        for (size_t m = 0; m < tones; ++m) {
            offsets.push_back(kTwoPi * 13e6 * (static_cast<double>(m) - (tones - 1) / 2.0));
        }
        std::vector<cd> z(n);
        for (size_t k = 0; k < n; ++k) {
            z[k] = std::polar(1.0, -offsets[1] * dt * static_cast<double>(k));
        }
        auto r = readout::demultiplex(z, offsets, {readout::boxcar_window(n, dt)}, dt);
        double worst = 0;
        for (size_t m = 0; m < tones; ++m) {
            if (m != 1) {
                worst = std::max(worst, std::abs(r.iq[m]));
            }
        }
        return worst;
    };
    double sinc = std::abs(std::sin(M_PI * 1.3) / (M_PI * 1.3));
    double boxcar = leak(0.5e-9, 200, 2);
    o.check(std::abs(boxcar - sinc) <= 2e-3, fmt("100 ns boxcar leakage %.4f, |sinc(1.3)| = %.4f", boxcar, sinc));
    double orthogonal = leak(1 / (13e6 * 160), 320, 4);
    o.check(orthogonal < 1e-9, fmt("integer-period window leakage across 4 tones %.2e, limit 1e-9", orthogonal));

    // Four simulated qubits 13 MHz apart: crosstalk in the running integral ripples with window length.
    std::vector<readout::DispersiveQubit> qubits;
    readout::PulseProgram multi;
    multi.dt = p.dt;
    multi.lo_hz = 6.72e9;
    for (int m = 0; m < 4; ++m) {
        auto qm = rk_test::reference_qubit(kInf, 0);
        qm.omega_r = kTwoPi * (6.72e9 + 13e6 * (m - 1.5));
        qubits.push_back(qm);
        multi.tones.push_back(rk_test::reference_program(qm).tones[0]);
    }
    readout::ShotOptions opt;
    opt.noiseless = true;
    opt.series_bin = 1;
    auto all = readout::simulate_shots(qubits, multi, opt);
    readout::PulseProgram solo = multi;
    solo.tones = {multi.tones[1]};
    auto alone = readout::simulate_shots({qubits[1]}, solo, opt);
    std::vector<double> crosstalk;
    cd acc_all, acc_alone;
    for (size_t k = 0; k < all.samples; ++k) {
        acc_all += all.shots[0].series[1][k];
        acc_alone += alone.shots[0].series[0][k];
        crosstalk.push_back(std::abs(acc_all - acc_alone) / std::abs(acc_alone));
    }
    size_t extrema = 0;
    double ripple = 0;
    size_t start = static_cast<size_t>(50e-9 / p.dt);
    for (size_t k = start + 1; k + 1 < crosstalk.size(); ++k) {
        if ((crosstalk[k] - crosstalk[k - 1]) * (crosstalk[k + 1] - crosstalk[k]) < 0) {
            ++extrema;
        }
        ripple = std::max(ripple, crosstalk[k]);
    }
    o.check(ripple > 0.01 && extrema >= 2,
            fmt("boxcar crosstalk on tone 1 of 4 peaks at %.1f%% with %zu turning points after 50 ns", ripple * 100,
                extrema));
    return o;
}

// 9. Property suites.
Outcome properties() {
    Outcome o;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> freq(1e9, 10e9);
    double worst_recip = 0, worst_pass = 0, worst_kcl = 0;
    size_t solved = 0;
    for (int i = 0; i < 1000; ++i) {
        auto n = rk_test::random_passive_netlist(rng);
        Omega w = Omega::from_hz(freq(rng));
        Eigen::Matrix2cd s;
        try {
            s = circuit::s_params(n, w);
        } catch (const SingularSystemError &) {
            continue;
        }
        ++solved;
        worst_recip = std::max(worst_recip, std::abs(s(1, 0) - s(0, 1)) / std::max(std::abs(s(1, 0)), 1e-12));
        worst_pass = std::max({worst_pass, std::norm(s(0, 0)) + std::norm(s(1, 0)) - 1,
                               std::norm(s(1, 1)) + std::norm(s(0, 1)) - 1});
        auto driven = n;
        driven.add(circuit::Element::current_source("Itest", n.ports[0].node, "gnd", 1e-3));
        auto sol = circuit::solve(driven, w);
        for (const auto &r : circuit::kcl_residuals(driven, sol)) {
            worst_kcl = std::max(worst_kcl, r.residual / std::max(r.scale, 1e-300));
        }
    }
    o.check(solved >= 990, fmt("%zu of 1000 random netlists solved", solved));
    o.check(worst_recip <= 1e-9, fmt("reciprocity |S21 - S12|/|S21| max %.2e, limit 1e-9", worst_recip));
    o.check(worst_pass <= 1e-9, fmt("passivity column power excess max %.2e, limit 1e-9", worst_pass));
    o.check(worst_kcl <= 1e-9, fmt("KCL relative residual max %.2e, limit 1e-9", worst_kcl));

    double worst_stamp = 0;
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 1000; ++i) {
        circuit::Element e;
        double scale = std::pow(10.0, u(rng));
        switch (i % 5) {
            case 0: e = circuit::Element::resistor("X", "a", "gnd", 50 * scale); break;
            case 1: e = circuit::Element::capacitor("X", "a", "gnd", 1e-12 * scale); break;
            case 2: e = circuit::Element::inductor("X", "a", "gnd", 1e-9 * scale); break;
            case 3:
                e = circuit::Element::stub("X", "a", "gnd", 50 * scale, 6e9, circuit::StubTermination::shorted);
                break;
            default:
                e = circuit::Element::stub("X", "a", "gnd", 50 * scale, 6e9, circuit::StubTermination::open);
                break;
        }
        circuit::Netlist n;
        n.declare("gnd");
        n.add(e);
        Omega w = Omega::from_hz(freq(rng));
        auto y = circuit::external_admittance(n, "a", w);
        auto ref = rk_test::closed_form_admittance(e, w.rad_per_s);
        worst_stamp = std::max(worst_stamp, std::abs(y - ref) / std::abs(ref));
    }
    o.check(worst_stamp <= 1e-12, fmt("stamped vs closed-form admittance max relative error %.2e, limit 1e-12",
                                      worst_stamp));

    auto q = rk_test::reference_qubit();
    auto p = rk_test::reference_program(q);
    auto opt = reference_options(2000, 4242);
    opt.herald = true;
    opt.preparation = readout::Preparation::independent;
    setenv("READOUTKIT_THREADS", "1", 1);
    auto a = readout::simulate_shots({q}, p, opt);
    setenv("READOUTKIT_THREADS", "3", 1);
    auto b = readout::simulate_shots({q}, p, opt);
    unsetenv("READOUTKIT_THREADS");
    o.check(readout::shots_csv(a) == readout::shots_csv(b) && readout::series_csv(a) == readout::series_csv(b),
            "identical seed gives byte-identical shot and series CSVs with 1 and 3 threads");

    auto mc = readout::simulate_shots({rk_test::reference_qubit(kInf, 0)}, p, reference_options(10000, 5150));
    auto w = fidelity::bin_window(mc, 0, fidelity::WindowMode::matched);
    auto matched_pts = fidelity::labeled_points(mc, 0, w);
    auto box_pts = fidelity::labeled_points(mc, 0);
    double matched = fidelity::fit_clouds(matched_pts.points, matched_pts.labels).snr();
    double box = fidelity::fit_clouds(box_pts.points, box_pts.labels).snr();
    // One standard error of s/sigma at 5000 shots per state.
    double se = box * std::sqrt(1.0 / 5000 + 1.0 / (box * box) * 2.0 / 5000);
    o.check(matched >= box - se, fmt("matched-window s/sigma %.3f vs boxcar %.3f (1 sigma = %.3f)", matched, box, se));
    return o;
}

struct Criterion {
    const char *title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"readoutkit acceptance suite"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {"design-point reproduction", design_point},
        {"analytic vs numeric T1 agreement", analytic_vs_numeric},
        {"pass-band fidelity", passband},
        {"ring-down", ring_down},
        {"error-budget closure", budget_closure},
        {"efficiency round trip", efficiency_round_trip},
        {"separation-fidelity geometry", separation_geometry},
        {"time-domain substitutes", time_domain_properties},
        {"property suites", properties},
    };
    bool all_pass = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<size_t>(only) != i + 1) {
            continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception &ex) {
            out.check(false, std::string("exception: ") + ex.what());
        }
        all_pass = all_pass && out.pass;
        std::printf("[%s] criterion %zu: %s (%.1f s)\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].title,
                    seconds_since(t0));
        for (const auto &l : out.lines) {
            std::printf("    %s\n", l.c_str());
        }
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
