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

#ifndef READOUTKIT_DESIGN_CHAIN_PARAMS_H
#define READOUTKIT_DESIGN_CHAIN_PARAMS_H

namespace readoutkit::design {

/// Physical parameters of one qubit / measurement resonator / filter chain. Angular frequencies
/// in rad/s, capacitances in F, impedances in ohms. Detunings are derived, never stored.
struct ChainParams {
    double omega_q = 0;
    double omega_r = 0;
    double q_filter = 0;
    double g = 0;
    double kappa_r = 0;
    double c_q = 0;
    double c_g = 0;
    double c_kappa = 0;
    double c_f = 0;
    double z_q0 = 0;
    double z_r0 = 0;
    double z_f0 = 0;
    double z_line = 0;

    /// omega_q - omega_r.
    double delta() const {
        return omega_q - omega_r;
    }
    /// (omega_q - omega_r) / omega_r.
    double delta_x() const {
        return delta() / omega_r;
    }

    /// Throws std::invalid_argument if any field is non-positive or non-finite, or |delta_x| >= 1.
    void validate() const;

    /// Builds a self-consistent parameter set from circuit values: C_F = 1/(omega_r Z_F0),
    /// Z_q0 = 1/(omega_q C_q), g from the capacitive coupling formula with C_r = 1/(omega_r Z_r0),
    /// and Z_line = (pi/4) Z_r0.
    static ChainParams from_circuit(double omega_q, double omega_r, double q_filter, double c_q, double c_g,
                                    double c_kappa, double z_r0, double z_f0, double kappa_r);
};

}  // namespace readoutkit::design

#endif
