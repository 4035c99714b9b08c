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

#include "readoutkit/design/formulas.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "readoutkit/errors.h"
#include "readoutkit/units.h"

namespace readoutkit::design {

namespace {

void require_positive(double v, const char *what) {
    if (!(v > 0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
    }
}

void require_off_resonance(double delta_x, const char *what) {
    if (delta_x == 0) {
        throw OnResonanceError(std::string(what) + ": qubit exactly on resonance (delta_x = 0)");
    }
}

double pow4(double x) {
    double x2 = x * x;
    return x2 * x2;
}

}  // namespace

double detuning_factor(double delta_x) {
    return (2 * delta_x + delta_x * delta_x) / (1 + delta_x);
}

std::complex<double> ModeImpedance::impedance() const {
    if (on_resonance()) {
        throw OnResonanceError("on resonance: infinite impedance");
    }
    return 1.0 / admittance;
}

ModeImpedance resonance_impedance(double z_char, double delta_x) {
    require_positive(z_char, "resonance_impedance: characteristic impedance");
    if (!(delta_x > -1)) {
        throw std::invalid_argument("resonance_impedance: delta_x must exceed -1");
    }
    return ModeImpedance{std::complex<double>{0, detuning_factor(delta_x) / z_char}};
}

double coupling_g(double c_g, double c_q, double c_r, double omega_q, double omega_r) {
    if (!(c_g >= 0)) {
        throw std::invalid_argument("coupling_g: C_g must be non-negative");
    }
    require_positive(c_q, "coupling_g: C_q");
    require_positive(c_r, "coupling_g: C_r");
    require_positive(omega_q, "coupling_g: omega_q");
    require_positive(omega_r, "coupling_g: omega_r");
    return 0.5 * c_g / std::sqrt(c_q * c_r) * std::sqrt(omega_q * omega_r);
}

double coupling_capacitance_for_g(double g, double c_q, double c_r, double omega_q, double omega_r) {
    return 2 * g * std::sqrt(c_q * c_r) / std::sqrt(omega_q * omega_r);
}

double q_qubit(const ChainParams &p) {
    p.validate();
    double dx = p.delta_x();
    require_off_resonance(dx, "q_qubit");
    double z_g = 1 / (p.omega_q * p.c_g);
    double z_k = 1 / (p.omega_q * p.c_kappa);
    double ratio = z_g * z_k / (p.z_r0 * p.z_f0);
    return p.q_filter * (p.c_q / p.c_f) * ratio * ratio * pow4(detuning_factor(dx));
}

double q_resonator(double z_kappa_mag, double q_filter, double z_f0, double z_r0) {
    require_positive(z_kappa_mag, "q_resonator: |Z_kappa|");
    require_positive(q_filter, "q_resonator: Q_F");
    require_positive(z_f0, "q_resonator: Z_F0");
    require_positive(z_r0, "q_resonator: Z_r0");
    return z_kappa_mag * z_kappa_mag / (q_filter * z_f0 * z_r0);
}

double kappa_t1_lumped(const ChainParams &p, ResonatorForm form) {
    p.validate();
    double dx = p.delta_x();
    require_off_resonance(dx, "kappa_t1_lumped");
    double z_r0 = form == ResonatorForm::quarter_wave ? quarter_wave_char_impedance(p.z_line) : p.z_r0;
    double wr_wq = p.omega_r / p.omega_q;
    double cq_cg = p.c_q / p.c_g;
    return p.q_filter * p.q_filter * wr_wq * wr_wq * cq_cg * cq_cg * (p.z_q0 / z_r0) * pow4(detuning_factor(dx));
}

double kappa_t1_simplified(double delta, double g, double omega_q, double omega_r, double q_filter) {
    require_positive(g, "kappa_t1_simplified: g");
    require_positive(q_filter, "kappa_t1_simplified: Q_F");
    require_positive(omega_q, "kappa_t1_simplified: omega_q");
    require_positive(omega_r, "kappa_t1_simplified: omega_r");
    double d2 = delta * delta;
    return 4 * d2 * d2 * q_filter * q_filter / (g * g * omega_q * omega_q);
}

double kappa_t1_unfiltered_bound(double delta, double g) {
    require_positive(g, "kappa_t1_unfiltered_bound: g");
    return (delta / g) * (delta / g);
}

double quarter_wave_char_impedance(double z_line) {
    return 4 / std::numbers::pi * z_line;
}

LumpedMode lambda_quarter_equivalent(double z_line, double f0_hz) {
    require_positive(z_line, "lambda_quarter_equivalent: Z_line");
    require_positive(f0_hz, "lambda_quarter_equivalent: f0");
    double w0 = kTwoPi * f0_hz;
    LumpedMode m;
    m.z_char = quarter_wave_char_impedance(z_line);
    m.capacitance = 1 / (m.z_char * w0);
    m.inductance = m.z_char / w0;
    return m;
}

}  // namespace readoutkit::design
