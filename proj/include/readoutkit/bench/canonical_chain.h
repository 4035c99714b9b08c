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

#ifndef READOUTKIT_BENCH_CANONICAL_CHAIN_H
#define READOUTKIT_BENCH_CANONICAL_CHAIN_H

#include <optional>

#include "json.hpp"
#include "readoutkit/circuit/netlist.h"
#include "readoutkit/design/chain_params.h"
#include "readoutkit/design/formulas.h"

namespace readoutkit::bench {

enum class ModeModel {
    /// Parallel inductor and capacitor.
    lumped,
    /// Shorted quarter-wave transmission-line stub.
    quarter_wave,
};

struct QubitSpec {
    /// Total qubit capacitance, F.
    double c_q = 90e-15;
    double f_hz = 6.0e9;
};

struct ResonatorSpec {
    double f_hz = 6.8e9;
    ModeModel model = ModeModel::quarter_wave;
    double z_line = 50;
    /// Lumped model only; defaults to (4/pi) z_line.
    std::optional<double> z_char;
};

/// The filter is a parallel mode with quality factor `q`, loaded by the 50 ohm environment.
/// Without `z_char` (lumped model) the environment resistor sits directly across the mode, so
/// Z_F0 = R_e / Q_F. With `z_char`, or the quarter-wave model, the environment is coupled through
/// an ideal tap and appears across the mode as Q_F * Z_F0.
struct FilterSpec {
    double f_hz = 6.8e9;
    double q = 30;
    ModeModel model = ModeModel::lumped;
    double z_line = 50;
    std::optional<double> z_char;
};

struct CouplingSpec {
    /// Qubit-resonator coupling capacitor; if absent, derived from `g_hz` at the design point.
    std::optional<double> c_g;
    std::optional<double> g_hz = 90e6;
    /// Resonator-filter coupling capacitor; if absent, solved from `target_kappa`.
    std::optional<double> c_kappa;
};

struct CanonicalChainSpec {
    QubitSpec qubit;
    ResonatorSpec resonator;
    FilterSpec filter;
    CouplingSpec couplings;
    double r_env = 50;
    /// Target resonator leakage rate, 1/s.
    std::optional<double> target_kappa;
    /// Allowed relative mismatch between resonator and filter frequencies.
    double frequency_tolerance = 0.02;
    /// External Q of the weak input capacitor used for transmission measurements.
    double input_q = 1000;

    /// Throws std::invalid_argument on non-physical values or resonator/filter mismatch.
    void validate() const;

    double omega_q() const;
    double omega_r() const;
    double omega_f() const;
    double z_r0() const;
    double z_f0() const;
    bool filter_tapped() const;
    /// Resistance the filter mode sees from the environment.
    double filter_load() const;
    /// Total resonator capacitance 1/(omega_r Z_r0).
    double c_r() const;
    double c_f() const;
    double c_g() const;
    double c_kappa() const;
    double target_kappa_or_throw() const;

    /// Analytic parameter set consistent with this circuit.
    design::ChainParams chain_params() const;
    design::ResonatorForm resonator_form() const;
};

enum class ChainView {
    /// Qubit tank, resonator, filter and environment resistor.
    full,
    /// `full` without the qubit tank; node "q" is left for an admittance probe.
    environment,
    /// Filter alone between a weak input capacitor (port 1, node "in") and the output (port 2, node "f").
    passband_bare,
    /// `passband_bare` plus the measurement resonator hanging off the filter.
    passband_loaded,
};

/// Node names: "q" qubit, "r" resonator, "f" filter, "in" input feed, "gnd" ground.
/// Element names: Lq/Cq qubit, Cg, Lr/Cr or Tr resonator, Ck, LF/CF or TF filter, Re or Re_tap
/// load, Cin input. Shunt capacitors and stub lengths are compensated for the coupling
/// capacitors so every loaded mode resonates at its declared frequency.
circuit::Netlist build_netlist(const CanonicalChainSpec &spec, ChainView view = ChainView::full);

/// C_kappa giving resonator leakage rate `target_kappa`: |Z_k| = sqrt(Q_r Q_F Z_F0 Z_r0),
/// Q_r = omega_r / kappa, C_kappa = 1 / (omega_r |Z_k|).
double solve_kappa_coupling(const CanonicalChainSpec &spec, double target_kappa);

nlohmann::json to_json(const CanonicalChainSpec &spec);
/// Missing fields keep their defaults. Throws std::invalid_argument on bad values.
CanonicalChainSpec chain_spec_from_json(const nlohmann::json &j);

}  // namespace readoutkit::bench

#endif
