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

#include "readoutkit/cli/commands.h"

#include <cmath>
#include <map>
#include <sstream>

#include "json.hpp"
#include "readoutkit/bench/comparison.h"
#include "readoutkit/design/formulas.h"
#include "readoutkit/errors.h"
#include "readoutkit/fidelity/budget.h"
#include "readoutkit/fidelity/curve.h"
#include "readoutkit/fidelity/efficiency.h"
#include "readoutkit/fidelity/herald.h"
#include "readoutkit/readout/compression.h"
#include "readoutkit/units.h"
#include "readoutkit/util/csv.h"
#include "readoutkit/util/files.h"

namespace readoutkit::cli {

using nlohmann::json;

namespace {

void write_json(const std::filesystem::path &path, const json &j) {
    util::write_file_atomic(path, j.dump(2) + "\n");
}

json design_report(const bench::CanonicalChainSpec &spec) {
    if (spec.qubit.f_hz == spec.resonator.f_hz) {
        throw OnResonanceError("design: qubit and resonator frequencies coincide (Delta = 0); the dispersive "
                               "design formulas diverge there");
    }
    double kappa = spec.target_kappa_or_throw();
    auto p = spec.chain_params();
    double g = design::coupling_g(spec.c_g(), spec.qubit.c_q, spec.c_r(), spec.omega_q(), spec.omega_r());
    double delta = spec.omega_q() - spec.omega_r();
    double kt1_circuit = design::kappa_t1_lumped(p, design::ResonatorForm::quarter_wave);
    double kt1_simple = design::kappa_t1_simplified(delta, g, spec.omega_q(), spec.omega_r(), spec.filter.q);
    json r;
    r["qubit_hz"] = spec.qubit.f_hz;
    r["resonator_hz"] = spec.resonator.f_hz;
    r["q_filter"] = spec.filter.q;
    r["g_hz"] = g / kTwoPi;
    r["c_g_f"] = spec.c_g();
    r["kappa_inv_ns"] = 1e9 / kappa;
    r["c_kappa_f"] = bench::solve_kappa_coupling(spec, kappa);
    r["kappa_t1_quarter_wave"] = kt1_circuit;
    r["kappa_t1_simplified"] = kt1_simple;
    r["kappa_t1_unfiltered"] = design::kappa_t1_unfiltered_bound(delta, g);
    r["t1_quarter_wave_us"] = kt1_circuit / kappa * 1e6;
    r["t1_simplified_us"] = kt1_simple / kappa * 1e6;
    r["t1_unfiltered_us"] = design::kappa_t1_unfiltered_bound(delta, g) / kappa * 1e6;
    return r;
}

std::string fixed(double v, int digits) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(digits);
    s << v;
    return s.str();
}

readout::Window tone_window(const SimulateConfig &s, size_t m) {
    const auto &q = s.qubits[m];
    auto a0 = readout::mean_amplitude(q, s.program, m, 0);
    auto a1 = readout::mean_amplitude(q, s.program, m, 1);
    double dt = s.program.dt;
    if (s.window == WindowChoice::boxcar) {
        return readout::boxcar_window(a0.size(), dt);
    }
    double gain = std::sqrt(s.options.eta * q.kappa);
    for (auto &a : a0) {
        a *= gain;
    }
    for (auto &a : a1) {
        a *= gain;
    }
    auto mode = s.window == WindowChoice::matched ? fidelity::WindowMode::matched : fidelity::WindowMode::empirical;
    return fidelity::optimal_window(a0, a1, dt, 1 / (2 * dt), mode);
}

void read_shot_points(const std::filesystem::path &path,
                      std::map<size_t, std::vector<std::pair<size_t, std::complex<double>>>> &by_tone) {
    std::istringstream in(util::read_file(path));
    std::string line;
    if (!std::getline(in, line) || line.rfind("shot,tone,i,q", 0) != 0) {
        throw ConfigError("analyze: " + path.string() + " is not a shots CSV");
    }
    size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) {
            continue;
        }
        auto cells = util::split_csv_line(line);
        if (cells.size() < 4) {
            throw ConfigError("analyze: short row " + std::to_string(row));
        }
        try {
            size_t shot = std::stoull(cells[0]);
            size_t tone = std::stoull(cells[1]);
            by_tone[tone].push_back({shot, {std::stod(cells[2]), std::stod(cells[3])}});
        } catch (const std::exception &) {
            throw ConfigError("analyze: unreadable row " + std::to_string(row));
        }
    }
}

}  // namespace

void cmd_design(const RunConfig &config, const std::filesystem::path &out_dir, std::ostream &out) {
    auto d = design_config(config);
    json reports = json::array();
    for (const auto &spec : d.specs) {
        reports.push_back(design_report(spec));
    }
    std::filesystem::create_directories(out_dir);
    write_json(out_dir / "design_report.json", {{"schema_version", kSchemaVersion}, {"reports", reports}});
    for (const auto &r : reports) {
        out << "design kappa_r^-1 = " << fixed(r["kappa_inv_ns"].get<double>(), 1) << " ns\n";
        out << "  Delta/2pi = " << fixed((r["qubit_hz"].get<double>() - r["resonator_hz"].get<double>()) / 1e6, 1)
            << " MHz, g/2pi = " << fixed(r["g_hz"].get<double>() / 1e6, 2) << " MHz\n";
        out << "  kappa_r*T1 (quarter-wave circuit form) = " << fixed(r["kappa_t1_quarter_wave"].get<double>(), 1) << "\n";
        out << "  kappa_r*T1 (simplified form) = " << fixed(r["kappa_t1_simplified"].get<double>(), 1) << "\n";
        out << "  kappa_r*T1 (unfiltered bound) = " << fixed(r["kappa_t1_unfiltered"].get<double>(), 1) << "\n";
        out << "  T1 (simplified form) = " << fixed(r["t1_simplified_us"].get<double>(), 1) << " us\n";
        out << "  T1 (quarter-wave circuit form) = " << fixed(r["t1_quarter_wave_us"].get<double>(), 1) << " us\n";
        out << "  C_kappa = " << fixed(r["c_kappa_f"].get<double>() * 1e15, 3) << " fF\n";
    }
}

void cmd_sweep(const RunConfig &config, const std::filesystem::path &out_dir, std::ostream &out) {
    auto s = sweep_config(config);
    auto grid = bench::detuning_grid_hz(s.delta_min_hz, s.delta_max_hz, s.points_per_sign);
    auto rows = bench::fig3_sweep(s.spec, grid, s.kappas);
    std::vector<double> f(s.passband_points);
    for (size_t i = 0; i < f.size(); ++i) {
        f[i] = s.passband_start_hz +
               (s.passband_stop_hz - s.passband_start_hz) * static_cast<double>(i) / static_cast<double>(f.size() - 1);
    }
    auto pb = bench::passband_scan(s.spec, f);
    double suppression = 1 / bench::transmission_ratio(s.spec, s.spec.qubit.f_hz, s.spec.resonator.f_hz);

    std::filesystem::create_directories(out_dir);
    util::write_file_atomic(out_dir / "fig3.csv", bench::comparison_csv(rows));
    util::write_file_atomic(out_dir / "passband.csv", pb.to_csv());
    write_json(out_dir / "passband_fit.json", {{"schema_version", kSchemaVersion},
                                               {"f0_hz", pb.fit.f0_hz},
                                               {"q", pb.fit.q},
                                               {"peak", pb.fit.peak},
                                               {"residual", pb.fit.residual},
                                               {"qubit_suppression", suppression}});

    size_t failed = 0;
    double worst_1ghz = 0;
    for (const auto &r : rows) {
        if (!r.ok()) {
            ++failed;
        } else if (std::abs(r.delta) <= kTwoPi * 1e9) {
            worst_1ghz = std::max(worst_1ghz, r.rel_diff);
        }
    }
    out << "fig3 rows: " << rows.size() << " (" << failed << " failed)\n";
    out << "max |T1_a - T1_n| / T1_n for |Delta|/2pi <= 1 GHz: " << fixed(worst_1ghz, 4) << "\n";
    out << "passband fit: f0 = " << fixed(pb.fit.f0_hz / 1e9, 4) << " GHz, Q = " << fixed(pb.fit.q, 2) << "\n";
    out << "qubit-frequency suppression: " << fixed(suppression, 1) << "\n";
}

void cmd_simulate(const RunConfig &config, const std::filesystem::path &out_dir, std::ostream &out) {
    if (!config.seed) {
        throw ConfigError("simulate: an explicit seed is required (config 'seed' or --seed)");
    }
    auto s = simulate_config(config);
    const size_t tones = s.qubits.size();
    s.options.windows.clear();
    for (size_t m = 0; m < tones; ++m) {
        s.options.windows.push_back(tone_window(s, m));
    }
    auto set = readout::simulate_shots(s.qubits, s.program, s.options);

    json summary;
    summary["schema_version"] = kSchemaVersion;
    summary["seed"] = *config.seed;
    summary["n_shots"] = s.options.n_shots;
    summary["record_ns"] = set.record_length() * 1e9;
    summary["warnings"] = set.warnings;
    auto compression = readout::check_compression(readout::tone_loads(s.qubits, s.program, s.power_scales));
    summary["compression"] = {{"total_dbm", compression.total_dbm}, {"exceeds", compression.exceeds}};
    if (compression.exceeds) {
        summary["warnings"].push_back(compression.warning);
    }

    double step = s.grid_step ? *s.grid_step : set.bin_dt();
    std::vector<double> grid;
    for (size_t i = 1;; ++i) {
        double t = step * static_cast<double>(i);
        if (t > set.record_length() * (1 + 1e-9)) {
            break;
        }
        grid.push_back(t);
    }

    std::vector<std::string> curves;
    summary["tones"] = json::array();
    for (size_t m = 0; m < tones; ++m) {
        json tone;
        tone["f_hz"] = s.program.tones[m].f_hz;
        std::vector<size_t> subset;
        std::vector<std::complex<double>> iq;
        std::vector<int> labels;
        for (const auto &r : set.shots) {
            iq.push_back(r.iq[m]);
            labels.push_back(r.prepared[m]);
        }
        auto calibration = fidelity::fit_clouds(iq, labels);
        if (s.options.herald) {
            auto h = fidelity::herald(set, m, calibration, s.herald_threshold);
            subset = h.kept;
            tone["herald_discard_fraction"] = h.discard_fraction;
        }
        readout::Window weights;
        if (s.window != WindowChoice::boxcar) {
            weights = fidelity::bin_window(set, m,
                                           s.window == WindowChoice::matched ? fidelity::WindowMode::matched
                                                                              : fidelity::WindowMode::empirical,
                                           subset);
        }
        auto curve = fidelity::fidelity_vs_time(set, m, grid, weights, subset);
        curve.validate();
        curves.push_back(curve.to_csv());

        const auto &q = s.qubits[m];
        auto budget = fidelity::error_budget(q.t1, q.gamma_up, set.record_length(), s.options.t_gap);
        auto a0 = readout::mean_amplitude(q, s.program, m, 0);
        auto a1 = readout::mean_amplitude(q, s.program, m, 1);
        double rho10 = fidelity::ideal_coherence(a0, a1, q.kappa, s.options.windows[m], s.program.dt);
        const auto &fit = calibration;
        tone["clouds"] = fidelity::to_json(fit);
        tone["rho10_ideal"] = rho10;
        if (rho10 > 0 && rho10 < 1) {
            auto eta = fidelity::extract_efficiency(fit, rho10);
            tone["eta_extracted"] = eta.raw;
        } else {
            tone["eta_extracted"] = nullptr;
        }
        double crossing = std::nan("");
        for (size_t i = 0; i < curve.t.size(); ++i) {
            if (!curve.degenerate[i] && curve.eps_s[i] <= 0.01) {
                crossing = curve.t[i];
                break;
            }
        }
        tone["fs99_crossing_ns"] = std::isnan(crossing) ? json(nullptr) : json(crossing * 1e9);
        tone["eps_s_final"] = curve.eps_s.back();
        tone["eps_0_final"] = curve.eps_0.back();
        tone["eps_1_final"] = curve.eps_1.back();
        tone["budget"] = {{"eps_prep", budget.eps_prep},
                          {"eps_decay", budget.eps_decay},
                          {"eps_excite", budget.eps_excite},
                          {"f0_ceiling", budget.f0_ceiling},
                          {"f1_ceiling", budget.f1_ceiling}};
        summary["tones"].push_back(tone);

        out << "tone " << m << " (" << fixed(tone["f_hz"].get<double>() / 1e9, 4) << " GHz): F_s = "
            << fixed(1 - curve.eps_s.back(), 5) << ", eps_0 = " << fixed(curve.eps_0.back(), 4)
            << " (ceiling " << fixed(1 - budget.f0_ceiling, 4) << "), eps_1 = " << fixed(curve.eps_1.back(), 4)
            << " (ceiling " << fixed(1 - budget.f1_ceiling, 4) << ")";
        if (!std::isnan(crossing)) {
            out << ", F_s >= 99% from " << fixed(crossing * 1e9, 1) << " ns";
        }
        out << "\n";
        if (tone["eta_extracted"].is_number()) {
            out << "  extracted eta = " << fixed(tone["eta_extracted"].get<double>(), 4) << "\n";
        }
        if (tone.contains("herald_discard_fraction")) {
            out << "  herald discard fraction = " << fixed(tone["herald_discard_fraction"].get<double>(), 4) << "\n";
        }
    }
    for (const auto &w : summary["warnings"]) {
        out << "warning: " << w.get<std::string>() << "\n";
    }

    std::filesystem::create_directories(out_dir);
    util::write_file_atomic(out_dir / "shots.csv", readout::shots_csv(set));
    for (size_t m = 0; m < tones; ++m) {
        util::write_file_atomic(out_dir / ("fidelity_tone" + std::to_string(m) + ".csv"), curves[m]);
    }
    if (s.write_series) {
        util::write_file_atomic(out_dir / "series.csv", readout::series_csv(set));
    }
    write_json(out_dir / "summary.json", summary);
}

void cmd_analyze(const RunConfig &config, const std::filesystem::path &out_dir, std::ostream &out) {
    auto a = analyze_config(config);
    std::map<size_t, std::vector<std::pair<size_t, std::complex<double>>>> by_tone;
    read_shot_points(a.shots_csv, by_tone);
    if (by_tone.empty()) {
        throw ConfigError("analyze: shots file has no rows");
    }
    json report = json::array();
    for (const auto &[tone, rows] : by_tone) {
        std::vector<std::complex<double>> points;
        std::vector<int> labels;
        for (const auto &[shot, z] : rows) {
            points.push_back(z);
            labels.push_back(readout::prepared_label(a.preparation, 0, shot, tone));
        }
        auto fit = fidelity::fit_clouds(points, labels);
        json j = fidelity::to_json(fit);
        j["tone"] = tone;
        if (tone < a.rho10.size()) {
            j["eta"] = fidelity::extract_efficiency(fit, a.rho10[tone]).raw;
        }
        out << "tone " << tone << ": s/sigma = " << fixed(fit.snr(), 3)
            << ", F_s = " << fixed(fidelity::separation_fidelity(fit), 5) << "\n";
        report.push_back(j);
    }
    std::filesystem::create_directories(out_dir);
    write_json(out_dir / "clouds.json", {{"schema_version", kSchemaVersion}, {"tones", report}});
}

int run_command(const std::string &command, const CommandOptions &options, std::ostream &out, std::ostream &err) {
    try {
        RunConfig config = load_config(options.config);
        if (options.seed) {
            config.seed = options.seed;
        }
        std::filesystem::path out_dir = options.out ? *options.out : config.output_dir;
        if (command == "design") {
            cmd_design(config, out_dir, out);
        } else if (command == "sweep") {
            cmd_sweep(config, out_dir, out);
        } else if (command == "simulate") {
            cmd_simulate(config, out_dir, out);
        } else if (command == "analyze") {
            cmd_analyze(config, out_dir, out);
        } else {
            err << "error: unknown command '" << command << "'\n";
            return kExitConfig;
        }
        return kExitOk;
    } catch (const OnResonanceError &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitDegenerate;
    } catch (const DegenerateFitError &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitDegenerate;
    } catch (const EnvironmentallyUnlimitedError &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument &ex) {
        err << "config error: " << ex.what() << "\n";
        return kExitConfig;
    } catch (const nlohmann::json::exception &ex) {
        err << "config error: " << ex.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &ex) {
        err << command << " failed: " << ex.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace readoutkit::cli
