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

#include "readoutkit/cli/config.h"

#include <cmath>
#include <limits>

#include "readoutkit/readout/resonator.h"
#include "readoutkit/units.h"
#include "readoutkit/util/files.h"

namespace readoutkit::cli {

using nlohmann::json;

namespace {

template <typename F>
auto guarded(const char *section, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const ConfigError &) {
        throw;
    } catch (const json::exception &ex) {
        throw ConfigError(std::string(section) + ": " + ex.what());
    } catch (const std::invalid_argument &ex) {
        throw ConfigError(std::string(section) + ": " + ex.what());
    }
}

const json &section(const RunConfig &c, const char *name) {
    static const json empty = json::object();
    if (!c.raw.contains(name)) {
        return empty;
    }
    const json &s = c.raw.at(name);
    if (!s.is_object()) {
        throw ConfigError(std::string(name) + ": must be an object");
    }
    return s;
}

bench::CanonicalChainSpec chain_from(const RunConfig &c, const json &overrides = json::object()) {
    json merged = c.raw.contains("chain") ? c.raw.at("chain") : json::object();
    merged.merge_patch(overrides);
    return bench::chain_spec_from_json(merged);
}

std::vector<double> kappas_from(const json &s, const std::vector<double> &fallback_ns) {
    std::vector<double> ns = s.contains("kappa_inv_ns") ? s.at("kappa_inv_ns").get<std::vector<double>>() : fallback_ns;
    std::vector<double> out;
    for (double v : ns) {
        if (!(v > 0)) {
            throw ConfigError("kappa_inv_ns entries must be positive");
        }
        out.push_back(1 / (v * 1e-9));
    }
    return out;
}

readout::DispersiveQubit qubit_from(const json &j) {
    readout::DispersiveQubit q;
    q.chi = kTwoPi * j.at("chi_hz").get<double>();
    q.omega_r = kTwoPi * j.at("f_r_hz").get<double>();
    q.kappa = 1 / (j.at("kappa_inv_ns").get<double>() * 1e-9);
    if (j.contains("t1_us") && !j.at("t1_us").is_null()) {
        q.t1 = j.at("t1_us").get<double>() * 1e-6;
    }
    q.gamma_up = j.value("gamma_up_per_us", 0.0) * 1e6;
    q.initial_state = j.value("initial_state", 0);
    q.validate();
    return q;
}

/// Ring-up plus sustain per qubit, drive at the bare resonator frequency, sustain sized for the
/// requested photon number and the ring-up sized to reach it by the end of the ring-up segment.
readout::PulseProgram drive_from(const json &d, const std::vector<readout::DispersiveQubit> &qubits) {
    readout::PulseProgram p;
    p.dt = d.value("dt_ns", 0.5) * 1e-9;
    if (d.contains("lo_hz")) {
        p.lo_hz = d.at("lo_hz").get<double>();
    }
    double photons = d.value("photons", 58.0);
    double t_ring = d.value("t_ring_ns", 25.0) * 1e-9;
    double t_sustain = d.value("t_sustain_ns", 115.0) * 1e-9;
    for (const auto &q : qubits) {
        double sustain = readout::amplitude_for_photons(photons, q.kappa, q.chi);
        double ring = t_ring > 0 ? sustain / -std::expm1(-q.kappa * t_ring / 2) : 0;
        if (d.contains("ring_amplitude_factor")) {
            ring = sustain * d.at("ring_amplitude_factor").get<double>();
        }
        p.tones.push_back(readout::ring_up_sustain(q.omega_r / kTwoPi, t_ring, ring, t_sustain, sustain));
    }
    p.validate();
    return p;
}

WindowChoice parse_window(const std::string &s) {
    if (s == "boxcar") {
        return WindowChoice::boxcar;
    }
    if (s == "matched") {
        return WindowChoice::matched;
    }
    if (s == "empirical") {
        return WindowChoice::empirical;
    }
    throw ConfigError("unknown window '" + s + "'");
}

}  // namespace

readout::Preparation parse_preparation(const std::string &name) {
    if (name == "fixed") {
        return readout::Preparation::fixed;
    }
    if (name == "alternate") {
        return readout::Preparation::alternate;
    }
    if (name == "independent") {
        return readout::Preparation::independent;
    }
    throw ConfigError("unknown preparation '" + name + "'");
}

RunConfig parse_config(const std::string &text, const std::filesystem::path &base_dir) {
    RunConfig c;
    c.base_dir = base_dir;
    try {
        c.raw = json::parse(text);
    } catch (const json::exception &ex) {
        throw ConfigError(std::string("config: malformed JSON: ") + ex.what());
    }
    if (!c.raw.is_object()) {
        throw ConfigError("config: top level must be an object");
    }
    return guarded("config", [&] {
        if (!c.raw.contains("schema_version")) {
            throw ConfigError("config: schema_version is required");
        }
        c.schema_version = c.raw.at("schema_version").get<int>();
        if (c.schema_version != kSchemaVersion) {
            throw ConfigError("config: unrecognized schema_version " + std::to_string(c.schema_version));
        }
        if (c.raw.contains("seed")) {
            c.seed = c.raw.at("seed").get<uint64_t>();
        }
        if (c.raw.contains("output_dir")) {
            c.output_dir = base_dir / c.raw.at("output_dir").get<std::string>();
        } else {
            c.output_dir = base_dir;
        }
        return c;
    });
}

RunConfig load_config(const std::filesystem::path &path) {
    std::string text;
    try {
        text = util::read_file(path);
    } catch (const std::exception &ex) {
        throw ConfigError(std::string("config: ") + ex.what());
    }
    return parse_config(text, path.has_parent_path() ? path.parent_path() : std::filesystem::path("."));
}

DesignConfig design_config(const RunConfig &c) {
    return guarded("design", [&] {
        DesignConfig d;
        const json &s = section(c, "design");
        if (s.contains("batch")) {
            for (const auto &entry : s.at("batch")) {
                d.specs.push_back(chain_from(c, entry));
            }
            if (d.specs.empty()) {
                throw ConfigError("design: batch is empty");
            }
        } else {
            d.specs.push_back(chain_from(c));
        }
        return d;
    });
}

SweepConfig sweep_config(const RunConfig &c) {
    return guarded("sweep", [&] {
        SweepConfig s;
        const json &j = section(c, "sweep");
        s.spec = chain_from(c);
        s.kappas = kappas_from(j, {12, 23, 35, 71});
        s.delta_min_hz = j.value("delta_min_hz", s.delta_min_hz);
        s.delta_max_hz = j.value("delta_max_hz", s.delta_max_hz);
        s.points_per_sign = j.value("points_per_sign", s.points_per_sign);
        s.passband_start_hz = j.value("passband_start_hz", s.passband_start_hz);
        s.passband_stop_hz = j.value("passband_stop_hz", s.passband_stop_hz);
        s.passband_points = j.value("passband_points", s.passband_points);
        if (s.passband_points < 4 || !(s.passband_stop_hz > s.passband_start_hz) || !(s.passband_start_hz > 0)) {
            throw ConfigError("sweep: bad passband grid");
        }
        return s;
    });
}

SimulateConfig simulate_config(const RunConfig &c) {
    return guarded("simulate", [&] {
        SimulateConfig s;
        const json &j = section(c, "simulate");
        if (!j.contains("qubits") || !j.at("qubits").is_array() || j.at("qubits").empty()) {
            throw ConfigError("simulate: qubits list is required");
        }
        for (const auto &q : j.at("qubits")) {
            s.qubits.push_back(qubit_from(q));
        }
        if (j.contains("pulse")) {
            s.program = readout::pulse_from_json(j.at("pulse"));
        } else {
            s.program = drive_from(j.value("drive", json::object()), s.qubits);
        }
        auto &o = s.options;
        o.eta = j.value("eta", 1.0);
        if (!j.contains("n_shots")) {
            throw ConfigError("simulate: n_shots is required");
        }
        auto shots = j.at("n_shots").get<int64_t>();
        if (shots < 1) {
            throw ConfigError("simulate: n_shots must be at least 1");
        }
        o.n_shots = static_cast<size_t>(shots);
        o.noiseless = j.value("noiseless", false);
        o.preparation = parse_preparation(j.value("preparation", std::string("alternate")));
        o.thermal_population = j.value("thermal_population", 0.0);
        o.herald = j.value("herald", false);
        o.t_gap = j.value("t_gap_ns", 0.0) * 1e-9;
        o.series_bin = j.value("series_bin", size_t{10});
        if (o.series_bin == 0) {
            throw ConfigError("simulate: series_bin must be at least 1");
        }
        s.window = parse_window(j.value("window", std::string("boxcar")));
        if (j.contains("grid_step_ns")) {
            s.grid_step = j.at("grid_step_ns").get<double>() * 1e-9;
        }
        s.write_series = j.value("write_series", false);
        if (j.contains("power_scale_w")) {
            for (const auto &v : j.at("power_scale_w")) {
                s.power_scales.push_back(v.is_null() ? std::nullopt : std::optional<double>(v.get<double>()));
            }
        }
        s.herald_threshold = j.value("herald_threshold", 0.0);
        if (c.seed) {
            o.seed = *c.seed;
        }
        return s;
    });
}

AnalyzeConfig analyze_config(const RunConfig &c) {
    return guarded("analyze", [&] {
        AnalyzeConfig a;
        const json &j = section(c, "analyze");
        if (!j.contains("shots_csv")) {
            throw ConfigError("analyze: shots_csv is required");
        }
        a.shots_csv = c.base_dir / j.at("shots_csv").get<std::string>();
        if (!std::filesystem::exists(a.shots_csv)) {
            throw ConfigError("analyze: shots file " + a.shots_csv.string() + " does not exist");
        }
        a.preparation = parse_preparation(j.value("preparation", std::string("alternate")));
        if (a.preparation == readout::Preparation::fixed) {
            throw ConfigError("analyze: fixed preparation gives a single cloud; use alternate or independent");
        }
        if (j.contains("rho10")) {
            a.rho10 = j.at("rho10").get<std::vector<double>>();
        }
        return a;
    });
}

}  // namespace readoutkit::cli
