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

#ifndef READOUTKIT_DESIGN_FORMULAS_H
#define READOUTKIT_DESIGN_FORMULAS_H

#include <complex>

#include "readoutkit/design/chain_params.h"

namespace readoutkit::design {

/// (2 dx + dx^2) / (1 + dx): the normalized admittance of a parallel mode at fractional
/// detuning dx = (w - w0) / w0. Equals w/w0 - w0/w exactly for a parallel LC.
double detuning_factor(double delta_x);

/// Impedance of a lossless parallel mode, 1/Z = (i / Z0) (2 dx + dx^2) / (1 + dx).
/// At dx = 0 the mode is an open circuit; that case is flagged rather than returned as inf.
struct ModeImpedance {
    std::complex<double> admittance;

    bool on_resonance() const {
        return admittance == std::complex<double>{0, 0};
    }
    /// Throws OnResonanceError when on resonance.
    std::complex<double> impedance() const;
};
ModeImpedance resonance_impedance(double z_char, double delta_x);

/// g = (1/2) C_g / sqrt(C_q C_r) * sqrt(w_q w_r).
double coupling_g(double c_g, double c_q, double c_r, double omega_q, double omega_r);

/// Inverse of coupling_g for C_g.
double coupling_capacitance_for_g(double g, double c_q, double c_r, double omega_q, double omega_r);

/// Qubit quality factor from circuit values,
/// Q_q = Q_F (C_q/C_F) (|Z_g||Z_k| / (Z_r0 Z_F0))^2 ((2dx+dx^2)/(1+dx))^4,
/// with the coupling capacitor impedances evaluated at the qubit frequency.
double q_qubit(const ChainParams &p);

/// Resonator quality factor with the filter seen as R_F = Q_F Z_F0:
/// Q_r = |Z_k|^2 / (Q_F Z_F0 Z_r0).
double q_resonator(double z_kappa_mag, double q_filter, double z_f0, double z_r0);

enum class ResonatorForm {
    /// Use Z_r0 as given.
    lumped,
    /// Quarter-wave resonator: Z_r0 replaced by (4/pi) Z_line.
    quarter_wave,
};

/// kappa_r T1 = Q_F^2 (w_r/w_q)^2 (C_q/C_g)^2 (Z_q0/Z_r0) ((2dx+dx^2)/(1+dx))^4.
/// Throws OnResonanceError at dx = 0.
double kappa_t1_lumped(const ChainParams &p, ResonatorForm form = ResonatorForm::lumped);

/// Leading-order form in coupling constants: 4 Delta^4 Q_F^2 / (g^2 w_q^2).
double kappa_t1_simplified(double delta, double g, double omega_q, double omega_r, double q_filter);

/// Unfiltered Purcell bound (Delta/g)^2.
double kappa_t1_unfiltered_bound(double delta, double g);

/// Characteristic impedance of a quarter-wave mode on a line of impedance z_line: (4/pi) z_line.
double quarter_wave_char_impedance(double z_line);

struct LumpedMode {
    double inductance = 0;
    double capacitance = 0;
    double z_char = 0;
};

/// Parallel-LC equivalent of a shorted quarter-wave line near its fundamental f0.
LumpedMode lambda_quarter_equivalent(double z_line, double f0_hz);

}  // namespace readoutkit::design

#endif
