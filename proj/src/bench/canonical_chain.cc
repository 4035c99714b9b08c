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

#include "readoutkit/bench/canonical_chain.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "readoutkit/units.h"

namespace readoutkit::bench {

using circuit::Element;
using circuit::Netlist;
using circuit::StubTermination;

namespace {

void require_positive(double v, const char *what) {
    if (!(v > 0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string("chain spec: ") + what + " must be positive and finite");
    }
}

/// Fundamental of a shorted stub that, with `extra_c` across it, resonates at omega.
double compensated_stub_f0(double omega, double z_line, double extra_c) {
    if (extra_c <= 0) {
        return omega / kTwoPi;
    }
    double theta = std::atan(1 / (omega * extra_c * z_line));
    return omega / kTwoPi * (std::numbers::pi / 2) / theta;
}

void add_mode(Netlist &n, const std::string &node, const std::string &suffix, ModeModel model, double omega,
              double z_char, double z_line, double extra_c) {
    if (model == ModeModel::quarter_wave) {
        n.add(Element::stub("T" + suffix, node, "gnd", z_line, compensated_stub_f0(omega, z_line, extra_c),
                            StubTermination::shorted));
        return;
    }
    double c_total = 1 / (omega * z_char);
    double c_shunt = c_total - extra_c;
    if (!(c_shunt > 0)) {
        throw std::invalid_argument("chain spec: coupling capacitors exceed the mode capacitance at node '" + node +
                                    "'");
    }
    n.add(Element::inductor("L" + suffix, node, "gnd", 1 / (omega * omega * c_total)));
    n.add(Element::capacitor("C" + suffix, node, "gnd", c_shunt));
}

}  // namespace

double CanonicalChainSpec::omega_q() const {
    return kTwoPi * qubit.f_hz;
}
double CanonicalChainSpec::omega_r() const {
    return kTwoPi * resonator.f_hz;
}
double CanonicalChainSpec::omega_f() const {
    return kTwoPi * filter.f_hz;
}

double CanonicalChainSpec::z_r0() const {
    if (resonator.model == ModeModel::lumped && resonator.z_char) {
        return *resonator.z_char;
    }
    return design::quarter_wave_char_impedance(resonator.z_line);
}

bool CanonicalChainSpec::filter_tapped() const {
    return filter.model == ModeModel::quarter_wave || filter.z_char.has_value();
}

double CanonicalChainSpec::z_f0() const {
    if (filter.model == ModeModel::quarter_wave) {
        return design::quarter_wave_char_impedance(filter.z_line);
    }
    if (filter.z_char) {
        return *filter.z_char;
    }
    return r_env / filter.q;
}

double CanonicalChainSpec::filter_load() const {
    return filter_tapped() ? filter.q * z_f0() : r_env;
}

double CanonicalChainSpec::c_r() const {
    return 1 / (omega_r() * z_r0());
}

double CanonicalChainSpec::c_f() const {
    return 1 / (omega_f() * z_f0());
}

double CanonicalChainSpec::c_g() const {
    if (couplings.c_g) {
        return *couplings.c_g;
    }
    if (couplings.g_hz) {
        return design::coupling_capacitance_for_g(kTwoPi * *couplings.g_hz, qubit.c_q, c_r(), omega_q(), omega_r());
    }
    throw std::invalid_argument("chain spec: give couplings.c_g or couplings.g_hz");
}

double CanonicalChainSpec::target_kappa_or_throw() const {
    if (!target_kappa) {
        throw std::invalid_argument("chain spec: target_kappa is required here");
    }
    return *target_kappa;
}

double CanonicalChainSpec::c_kappa() const {
    if (couplings.c_kappa) {
        return *couplings.c_kappa;
    }
    return solve_kappa_coupling(*this, target_kappa_or_throw());
}

void CanonicalChainSpec::validate() const {
    require_positive(qubit.c_q, "qubit.c_q");
    require_positive(qubit.f_hz, "qubit.f_hz");
    require_positive(resonator.f_hz, "resonator.f_hz");
    require_positive(resonator.z_line, "resonator.z_line");
    if (resonator.z_char) {
        require_positive(*resonator.z_char, "resonator.z_char");
    }
    require_positive(filter.f_hz, "filter.f_hz");
    require_positive(filter.q, "filter.q");
    require_positive(filter.z_line, "filter.z_line");
    if (filter.z_char) {
        require_positive(*filter.z_char, "filter.z_char");
    }
    require_positive(r_env, "r_env");
    require_positive(input_q, "input_q");
    if (couplings.c_g) {
        require_positive(*couplings.c_g, "couplings.c_g");
    } else if (couplings.g_hz) {
        require_positive(*couplings.g_hz, "couplings.g_hz");
    } else {
        throw std::invalid_argument("chain spec: give couplings.c_g or couplings.g_hz");
    }
    if (couplings.c_kappa) {
        require_positive(*couplings.c_kappa, "couplings.c_kappa");
    }
    if (target_kappa) {
        require_positive(*target_kappa, "target_kappa");
    }
    if (!(std::abs(filter.f_hz - resonator.f_hz) <= frequency_tolerance * resonator.f_hz)) {
        throw std::invalid_argument("chain spec: filter and resonator frequencies differ by more than the tolerance");
    }
}

design::ResonatorForm CanonicalChainSpec::resonator_form() const {
    return resonator.model == ModeModel::quarter_wave ? design::ResonatorForm::quarter_wave
                                                      : design::ResonatorForm::lumped;
}

design::ChainParams CanonicalChainSpec::chain_params() const {
    double ck = c_kappa();
    auto p = design::ChainParams::from_circuit(omega_q(), omega_r(), filter.q, qubit.c_q, c_g(), ck, z_r0(), z_f0(),
                                               target_kappa ? *target_kappa : 1.0);
    p.c_f = c_f();
    p.z_line = resonator.model == ModeModel::quarter_wave ? resonator.z_line : z_r0() * std::numbers::pi / 4;
    return p;
}

double solve_kappa_coupling(const CanonicalChainSpec &spec, double target_kappa) {
    require_positive(target_kappa, "target kappa");
    double q_r = spec.omega_r() / target_kappa;
    double z_k = std::sqrt(q_r * spec.filter.q * spec.z_f0() * spec.z_r0());
    return 1 / (spec.omega_r() * z_k);
}

Netlist build_netlist(const CanonicalChainSpec &spec, ChainView view) {
    spec.validate();
    Netlist n;
    n.ground = "gnd";
    n.declare("gnd");
    bool with_qubit = view == ChainView::full || view == ChainView::environment;
    bool with_resonator = view != ChainView::passband_bare;
    bool passband = view == ChainView::passband_bare || view == ChainView::passband_loaded;

    double cg = with_qubit ? spec.c_g() : 0;
    double ck = with_resonator ? spec.c_kappa() : 0;
    double c_in = 0;
    if (passband) {
        // Weak input capacitor: loading conductance w^2 C_in^2 R_in sets the input external Q.
        c_in = std::sqrt(spec.c_f() / (spec.omega_f() * spec.input_q * spec.r_env));
    }

    if (with_qubit) {
        n.declare("q");
        if (view == ChainView::full) {
            double c_shunt = spec.qubit.c_q - cg;
            if (!(c_shunt > 0)) {
                throw std::invalid_argument("chain spec: C_g exceeds the qubit capacitance");
            }
            n.add(Element::inductor("Lq", "q", "gnd", 1 / (spec.omega_q() * spec.omega_q() * spec.qubit.c_q)));
            n.add(Element::capacitor("Cq", "q", "gnd", c_shunt));
        }
        n.add(Element::capacitor("Cg", "q", "r", cg));
    }
    if (with_resonator) {
        add_mode(n, "r", "r", spec.resonator.model, spec.omega_r(), spec.z_r0(), spec.resonator.z_line, cg + ck);
        n.add(Element::capacitor("Ck", "r", "f", ck));
    }
    add_mode(n, "f", "F", spec.filter.model, spec.omega_f(), spec.z_f0(), spec.filter.z_line, ck + c_in);
    if (passband) {
        n.add(Element::capacitor("Cin", "in", "f", c_in));
        n.ports = {circuit::Port{"in", spec.r_env}, circuit::Port{"f", spec.filter_load()}};
    } else {
        n.add(Element::resistor(spec.filter_tapped() ? "Re_tap" : "Re", "f", "gnd", spec.filter_load()));
    }
    n.validate();
    return n;
}

namespace {

const char *model_name(ModeModel m) {
    return m == ModeModel::lumped ? "lumped" : "quarter_wave";
}

ModeModel parse_model(const std::string &s) {
    if (s == "lumped") {
        return ModeModel::lumped;
    }
    if (s == "quarter_wave") {
        return ModeModel::quarter_wave;
    }
    throw std::invalid_argument("chain spec: unknown mode model '" + s + "'");
}

template <typename T>
void put_optional(nlohmann::json &j, const char *key, const std::optional<T> &v) {
    if (v) {
        j[key] = *v;
    }
}

template <typename T>
void get_optional(const nlohmann::json &j, const char *key, std::optional<T> &v) {
    if (j.contains(key)) {
        if (j.at(key).is_null()) {
            v.reset();
        } else {
            v = j.at(key).get<T>();
        }
    }
}

}  // namespace

nlohmann::json to_json(const CanonicalChainSpec &spec) {
    nlohmann::json j;
    j["qubit"] = {{"c_q", spec.qubit.c_q}, {"f_hz", spec.qubit.f_hz}};
    j["resonator"] = {{"f_hz", spec.resonator.f_hz},
                      {"model", model_name(spec.resonator.model)},
                      {"z_line", spec.resonator.z_line}};
    put_optional(j["resonator"], "z_char", spec.resonator.z_char);
    j["filter"] = {{"f_hz", spec.filter.f_hz},
                   {"q", spec.filter.q},
                   {"model", model_name(spec.filter.model)},
                   {"z_line", spec.filter.z_line}};
    put_optional(j["filter"], "z_char", spec.filter.z_char);
    j["couplings"] = nlohmann::json::object();
    put_optional(j["couplings"], "c_g", spec.couplings.c_g);
    put_optional(j["couplings"], "g_hz", spec.couplings.g_hz);
    put_optional(j["couplings"], "c_kappa", spec.couplings.c_kappa);
    j["r_env"] = spec.r_env;
    put_optional(j, "target_kappa", spec.target_kappa);
    j["frequency_tolerance"] = spec.frequency_tolerance;
    j["input_q"] = spec.input_q;
    return j;
}

CanonicalChainSpec chain_spec_from_json(const nlohmann::json &j) {
    CanonicalChainSpec s;
    try {
        if (j.contains("qubit")) {
            const auto &q = j.at("qubit");
            s.qubit.c_q = q.value("c_q", s.qubit.c_q);
            s.qubit.f_hz = q.value("f_hz", s.qubit.f_hz);
        }
        if (j.contains("resonator")) {
            const auto &r = j.at("resonator");
            s.resonator.f_hz = r.value("f_hz", s.resonator.f_hz);
            if (r.contains("model")) {
                s.resonator.model = parse_model(r.at("model").get<std::string>());
            }
            s.resonator.z_line = r.value("z_line", s.resonator.z_line);
            get_optional(r, "z_char", s.resonator.z_char);
        }
        if (j.contains("filter")) {
            const auto &f = j.at("filter");
            s.filter.f_hz = f.value("f_hz", s.resonator.f_hz);
            s.filter.q = f.value("q", s.filter.q);
            if (f.contains("model")) {
                s.filter.model = parse_model(f.at("model").get<std::string>());
            }
            s.filter.z_line = f.value("z_line", s.filter.z_line);
            get_optional(f, "z_char", s.filter.z_char);
        } else {
            s.filter.f_hz = s.resonator.f_hz;
        }
        if (j.contains("couplings")) {
            const auto &c = j.at("couplings");
            get_optional(c, "c_g", s.couplings.c_g);
            get_optional(c, "g_hz", s.couplings.g_hz);
            get_optional(c, "c_kappa", s.couplings.c_kappa);
        }
        s.r_env = j.value("r_env", s.r_env);
        get_optional(j, "target_kappa", s.target_kappa);
        if (j.contains("target_kappa_inv_ns")) {
            s.target_kappa = 1 / (j.at("target_kappa_inv_ns").get<double>() * 1e-9);
        }
        s.frequency_tolerance = j.value("frequency_tolerance", s.frequency_tolerance);
        s.input_q = j.value("input_q", s.input_q);
    } catch (const nlohmann::json::exception &ex) {
        throw std::invalid_argument(std::string("chain spec: ") + ex.what());
    }
    s.validate();
    return s;
}

}  // namespace readoutkit::bench
