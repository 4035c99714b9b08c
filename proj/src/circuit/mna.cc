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

#include "readoutkit/circuit/mna.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "readoutkit/errors.h"

namespace readoutkit {

SingularSystemError::SingularSystemError(double omega, double condition, std::string null_hint)
    : std::runtime_error([&] {
          std::ostringstream ss;
          ss << "singular MNA system at omega=" << omega << " rad/s (f=" << omega / kTwoPi
             << " Hz), condition estimate " << condition << "; weakest unknown: " << null_hint;
          return ss.str();
      }()),
      omega(omega),
      condition(condition),
      null_hint(std::move(null_hint)) {
}

namespace circuit {

using cd = std::complex<double>;
constexpr cd kJ{0, 1};

std::complex<double> element_admittance(const Element &e, double omega) {
    switch (e.kind) {
        case ElementKind::resistor:
            return 1.0 / e.value;
        case ElementKind::capacitor:
            return kJ * omega * e.value;
        case ElementKind::inductor:
            return 1.0 / (kJ * omega * e.value);
        case ElementKind::tline_stub: {
            double theta = std::numbers::pi * omega / (2 * kTwoPi * e.stub_f0_hz);
            if (e.termination == StubTermination::shorted) {
                return -kJ / (std::tan(theta) * e.value);
            }
            return kJ * std::tan(theta) / e.value;
        }
        default:
            throw std::invalid_argument("element_admittance: '" + e.name + "' is a source");
    }
}

namespace {

/// MNA unknowns: non-ground node voltages followed by one branch current per voltage source.
struct System {
    std::map<std::string, int> node_index;
    std::vector<const Element *> vsources;
    std::vector<std::string> unknown_names;
    Eigen::MatrixXcd a;
    Eigen::VectorXcd b;

    int index(const std::string &node) const {
        auto it = node_index.find(node);
        return it == node_index.end() ? -1 : it->second;
    }
};

void stamp_admittance(System &s, int p, int n, cd y) {
    if (p >= 0) {
        s.a(p, p) += y;
    }
    if (n >= 0) {
        s.a(n, n) += y;
    }
    if (p >= 0 && n >= 0) {
        s.a(p, n) -= y;
        s.a(n, p) -= y;
    }
}

System assemble(const Netlist &netlist, double omega, const std::vector<Port> &terminations) {
    System s;
    int count = 0;
    for (const auto &node : netlist.nodes) {
        if (node != netlist.ground) {
            s.node_index[node] = count++;
            s.unknown_names.push_back("voltage of node '" + node + "'");
        }
    }
    for (const auto &e : netlist.elements) {
        if (e.kind == ElementKind::voltage_source) {
            s.vsources.push_back(&e);
            s.unknown_names.push_back("current of source '" + e.name + "'");
        }
    }
    int size = count + static_cast<int>(s.vsources.size());
    s.a = Eigen::MatrixXcd::Zero(size, size);
    s.b = Eigen::VectorXcd::Zero(size);

    int branch = count;
    for (const auto &e : netlist.elements) {
        int p = s.index(e.nodes[0]);
        int n = s.index(e.nodes[1]);
        switch (e.kind) {
            case ElementKind::voltage_source:
                // Unknown I is the current delivered out of the + terminal.
                if (p >= 0) {
                    s.a(p, branch) -= 1.0;
                    s.a(branch, p) += 1.0;
                }
                if (n >= 0) {
                    s.a(n, branch) += 1.0;
                    s.a(branch, n) -= 1.0;
                }
                s.b(branch) = e.phasor();
                branch++;
                break;
            case ElementKind::current_source:
                if (p >= 0) {
                    s.b(p) += e.phasor();
                }
                if (n >= 0) {
                    s.b(n) -= e.phasor();
                }
                break;
            default:
                stamp_admittance(s, p, n, element_admittance(e, omega));
        }
    }
    for (const auto &port : terminations) {
        stamp_admittance(s, s.index(port.node), -1, 1.0 / port.z_ref);
    }
    return s;
}

struct Factorization {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
    Eigen::VectorXd row_scale;
    double condition = 1;
};

Factorization factor(const System &s, double omega) {
    Factorization f;
    Eigen::Index n = s.a.rows();
    f.row_scale = Eigen::VectorXd::Ones(n);
    for (Eigen::Index r = 0; r < n; r++) {
        double m = s.a.row(r).cwiseAbs().maxCoeff();
        if (m > 0 && std::isfinite(m)) {
            f.row_scale(r) = 1 / m;
        }
    }
    Eigen::MatrixXcd scaled = f.row_scale.asDiagonal() * s.a;
    f.lu.compute(scaled);
    double rcond = f.lu.rcond();
    f.condition = rcond > 0 ? 1 / rcond : std::numeric_limits<double>::infinity();

    Eigen::VectorXd diag = f.lu.matrixLU().diagonal().cwiseAbs();
    if (!std::isfinite(f.condition) || f.condition > kConditionFail || !diag.allFinite() ||
        diag.minCoeff() == 0) {
        Eigen::Index weakest = 0;
        diag = diag.unaryExpr([](double v) { return std::isfinite(v) ? v : 0.0; });
        diag.minCoeff(&weakest);
        throw SingularSystemError(omega, f.condition, s.unknown_names.empty() ? "none" : s.unknown_names[weakest]);
    }
    return f;
}

Eigen::VectorXcd back_substitute(const Factorization &f, const Eigen::VectorXcd &rhs, double omega) {
    Eigen::VectorXcd x = f.lu.solve(f.row_scale.asDiagonal() * rhs);
    if (!x.allFinite()) {
        throw SingularSystemError(omega, f.condition, "non-finite solution");
    }
    return x;
}

Netlist with_sources_zeroed(const Netlist &netlist) {
    Netlist quiet = netlist;
    for (auto &e : quiet.elements) {
        if (e.is_source()) {
            e.value = 0;
        }
    }
    return quiet;
}

}  // namespace

std::complex<double> AcSolution::voltage(const std::string &node) const {
    for (size_t k = 0; k < nodes.size(); k++) {
        if (nodes[k] == node) {
            return voltages[k];
        }
    }
    throw std::out_of_range("no node '" + node + "' in solution");
}

std::complex<double> AcSolution::source_current(const std::string &source) const {
    for (size_t k = 0; k < sources.size(); k++) {
        if (sources[k] == source) {
            return source_currents[k];
        }
    }
    throw std::out_of_range("no source '" + source + "' in solution");
}

AcSolution solve(const Netlist &netlist, Omega omega) {
    netlist.validate();
    if (!(omega.rad_per_s > 0) || !std::isfinite(omega.rad_per_s)) {
        throw std::invalid_argument("solve: angular frequency must be positive and finite");
    }
    double w = omega.rad_per_s;
    System s = assemble(netlist, w, {});
    Factorization f = factor(s, w);
    Eigen::VectorXcd x = back_substitute(f, s.b, w);

    AcSolution sol;
    sol.omega = w;
    sol.condition = f.condition;
    sol.nodes = netlist.nodes;
    for (const auto &node : netlist.nodes) {
        int k = s.index(node);
        sol.voltages.push_back(k >= 0 ? x(k) : cd{0, 0});
    }
    int branch = static_cast<int>(s.node_index.size());
    for (const auto &e : netlist.elements) {
        if (e.kind == ElementKind::voltage_source) {
            sol.sources.push_back(e.name);
            sol.source_currents.push_back(x(branch++));
        } else if (e.kind == ElementKind::current_source) {
            sol.sources.push_back(e.name);
            sol.source_currents.push_back(e.phasor());
        }
    }
    if (f.condition > kConditionWarn) {
        std::ostringstream ss;
        ss << "ill-conditioned system (condition estimate " << f.condition << ") at f=" << omega.hz() << " Hz";
        sol.warnings.push_back(ss.str());
    }
    for (const auto &r : kcl_residuals(netlist, sol)) {
        if (r.residual > 1e-9 * r.scale) {
            sol.warnings.push_back("KCL residual " + std::to_string(r.residual) + " A at node '" + r.node + "'");
        }
    }
    return sol;
}

std::vector<KclResidual> kcl_residuals(const Netlist &netlist, const AcSolution &solution) {
    std::map<std::string, cd> net;
    std::map<std::string, double> scale;
    auto leave = [&](const std::string &node, cd current) {
        net[node] += current;
        scale[node] = std::max(scale[node], std::abs(current));
    };
    size_t src = 0;
    for (const auto &e : netlist.elements) {
        cd va = solution.voltage(e.nodes[0]);
        cd vb = solution.voltage(e.nodes[1]);
        cd i_ab;
        if (e.is_source()) {
            // A source delivering I out of its + terminal carries I from nodes[1] to nodes[0]
            // internally, i.e. -I leaves nodes[0] through it.
            i_ab = -solution.source_currents[src++];
        } else {
            i_ab = element_admittance(e, solution.omega) * (va - vb);
        }
        leave(e.nodes[0], i_ab);
        leave(e.nodes[1], -i_ab);
    }
    std::vector<KclResidual> out;
    for (const auto &node : netlist.nodes) {
        if (node == netlist.ground) {
            continue;
        }
        out.push_back(KclResidual{node, std::abs(net[node]), scale[node]});
    }
    return out;
}

std::complex<double> external_admittance(const Netlist &netlist, const std::string &probe_node, Omega omega) {
    if (!netlist.has_node(probe_node) || probe_node == netlist.ground) {
        throw InvalidNetlistError("probe node '" + probe_node + "' is not a non-ground node of the netlist");
    }
    Netlist probed = with_sources_zeroed(netlist);
    std::erase_if(probed.elements, [&](const Element &e) {
        if (e.kind != ElementKind::voltage_source) {
            return false;
        }
        const auto &[a, b] = e.nodes;
        return (a == probe_node && b == netlist.ground) || (b == probe_node && a == netlist.ground);
    });
    const std::string probe_name = "__probe";
    probed.add(Element::voltage_source(probe_name, probe_node, netlist.ground, 1.0));
    AcSolution sol = solve(probed, omega);
    return sol.source_current(probe_name) / 1.0;
}

double t1_limit(std::complex<double> y_external, double c_qubit) {
    if (!(c_qubit > 0)) {
        throw std::invalid_argument("t1_limit: qubit capacitance must be positive");
    }
    double g = std::abs(y_external.real());
    if (!(g >= 1e-30)) {
        throw EnvironmentallyUnlimitedError("environmentally unlimited at solver precision (|Re Y| < 1e-30 S)");
    }
    return c_qubit / g;
}

Eigen::MatrixXcd scattering_matrix(const Netlist &netlist, Omega omega) {
    netlist.validate();
    if (netlist.ports.empty()) {
        throw InvalidNetlistError("scattering_matrix: netlist declares no ports");
    }
    if (!(omega.rad_per_s > 0) || !std::isfinite(omega.rad_per_s)) {
        throw std::invalid_argument("scattering_matrix: angular frequency must be positive and finite");
    }
    double w = omega.rad_per_s;
    Netlist quiet = with_sources_zeroed(netlist);
    System s = assemble(quiet, w, netlist.ports);
    Factorization f = factor(s, w);

    const auto &ports = netlist.ports;
    auto n_ports = static_cast<Eigen::Index>(ports.size());
    Eigen::MatrixXcd sm(n_ports, n_ports);
    for (Eigen::Index k = 0; k < n_ports; k++) {
        // Unit incident voltage wave: Norton equivalent of 2 V behind Z_ref.
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(s.a.rows());
        rhs(s.index(ports[k].node)) += 2.0 / ports[k].z_ref;
        Eigen::VectorXcd x = back_substitute(f, rhs, w);
        for (Eigen::Index i = 0; i < n_ports; i++) {
            cd v = x(s.index(ports[i].node));
            cd reflected = v - (i == k ? 1.0 : 0.0);
            sm(i, k) = reflected * std::sqrt(ports[k].z_ref / ports[i].z_ref);
        }
    }
    return sm;
}

Eigen::Matrix2cd s_params(const Netlist &netlist, Omega omega) {
    if (netlist.ports.size() != 2) {
        throw InvalidNetlistError("s_params: exactly two ports required, netlist declares " +
                                  std::to_string(netlist.ports.size()));
    }
    return scattering_matrix(netlist, omega);
}

}  // namespace circuit
}  // namespace readoutkit
