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

#ifndef READOUTKIT_CIRCUIT_MNA_H
#define READOUTKIT_CIRCUIT_MNA_H

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "readoutkit/circuit/netlist.h"
#include "readoutkit/units.h"

namespace readoutkit::circuit {

/// Above this estimated condition number a solve still succeeds but records a warning.
inline constexpr double kConditionWarn = 1e12;
/// Above this estimated condition number a solve fails with SingularSystemError.
inline constexpr double kConditionFail = 1e15;

struct AcSolution {
    double omega = 0;
    std::vector<std::string> nodes;
    /// Aligned with `nodes`; the ground entry is exactly zero.
    std::vector<std::complex<double>> voltages;
    /// Source element names, in netlist order.
    std::vector<std::string> sources;
    /// Current each source delivers out of its positive terminal into the rest of the circuit.
    std::vector<std::complex<double>> source_currents;
    /// Estimated 1-norm condition number of the row-equilibrated MNA matrix.
    double condition = 1;
    std::vector<std::string> warnings;

    std::complex<double> voltage(const std::string &node) const;
    std::complex<double> source_current(const std::string &source) const;
};

/// Admittance of a passive element (R, L, C, stub) at angular frequency omega. Stubs use the
/// exact line input admittance: shorted -j cot(pi w / 2 w0) / Z0, open j tan(pi w / 2 w0) / Z0.
std::complex<double> element_admittance(const Element &element, double omega);

/// Solves the modified nodal analysis system of the netlist at omega.
/// Throws InvalidNetlistError, std::invalid_argument (omega <= 0) or SingularSystemError.
AcSolution solve(const Netlist &netlist, Omega omega);

struct KclResidual {
    std::string node;
    double residual = 0;
    /// Largest magnitude among the branch currents meeting at the node.
    double scale = 0;
};

/// Recomputes every branch current from the solved voltages and reports the current imbalance
/// at each non-ground node. Independent of the matrix assembly in `solve`.
std::vector<KclResidual> kcl_residuals(const Netlist &netlist, const AcSolution &solution);

/// Driving-point admittance I_s / V_s seen by a 1 V probe between `probe_node` and ground.
/// Independent sources already in the netlist are zeroed (voltage sources become shorts, current
/// sources opens), except that a voltage source sitting directly across the probe is replaced by
/// the probe itself.
std::complex<double> external_admittance(const Netlist &netlist, const std::string &probe_node, Omega omega);

/// T1 = C_q / |Re Y_e|. Throws EnvironmentallyUnlimitedError when |Re Y_e| < 1e-30 S.
double t1_limit(std::complex<double> y_external, double c_qubit);

/// Scattering matrix with respect to the declared ports and their real reference impedances,
/// built from one port excitation at a time (Thevenin source 2 V_inc behind Z_ref). Internal
/// sources are zeroed. S(i, k) is the wave leaving port i for a wave incident on port k.
Eigen::MatrixXcd scattering_matrix(const Netlist &netlist, Omega omega);

/// Two-port case of scattering_matrix; throws InvalidNetlistError unless exactly two ports.
Eigen::Matrix2cd s_params(const Netlist &netlist, Omega omega);

}  // namespace readoutkit::circuit

#endif
