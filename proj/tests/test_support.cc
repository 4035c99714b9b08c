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

#include "test_support.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "readoutkit/units.h"

namespace rk_test {

using readoutkit::circuit::Element;
using readoutkit::circuit::ElementKind;
using readoutkit::circuit::Netlist;
using readoutkit::circuit::StubTermination;

std::complex<double> closed_form_admittance(const Element &e, double omega) {
    const std::complex<double> j{0, 1};
    switch (e.kind) {
        case ElementKind::resistor:
            return 1.0 / e.value;
        case ElementKind::capacitor:
            return j * omega * e.value;
        case ElementKind::inductor:
            return 1.0 / (j * omega * e.value);
        case ElementKind::tline_stub: {
            // Electrical length beta l = (pi / 2)(f / f0).
            double bl = std::numbers::pi / 2 * omega / (readoutkit::kTwoPi * e.stub_f0_hz);
            std::complex<double> z_in = e.termination == StubTermination::shorted
                                            ? j * e.value * std::tan(bl)
                                            : -j * e.value / std::tan(bl);
            return 1.0 / z_in;
        }
        default:
            throw std::invalid_argument("closed_form_admittance: not a passive element");
    }
}

namespace {

std::complex<double> shunt_at(const Netlist &n, const std::string &node, double omega) {
    std::complex<double> y;
    for (const auto &e : n.elements) {
        bool to_ground = (e.nodes[0] == node && e.nodes[1] == n.ground) || (e.nodes[1] == node && e.nodes[0] == n.ground);
        if (to_ground && !e.is_source()) {
            y += closed_form_admittance(e, omega);
        }
    }
    return y;
}

}  // namespace

std::complex<double> ladder_admittance(const Netlist &env, double omega) {
    const Element *cg = env.find("Cg");
    const Element *ck = env.find("Ck");
    if (!cg || !ck) {
        throw std::invalid_argument("ladder oracle: expects Cg and Ck");
    }
    const std::complex<double> j{0, 1};
    std::complex<double> y_f = shunt_at(env, "f", omega);
    std::complex<double> z_branch = 1.0 / (j * omega * ck->value) + 1.0 / y_f;
    std::complex<double> y_r = shunt_at(env, "r", omega) + 1.0 / z_branch;
    std::complex<double> z_in = 1.0 / (j * omega * cg->value) + 1.0 / y_r;
    return 1.0 / z_in + shunt_at(env, "q", omega);
}

Netlist random_passive_netlist(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> node_count(2, 7);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_real_distribution<double> log_u(-1, 1);
    std::uniform_real_distribution<double> unit(0, 1);
    int nodes = node_count(rng);
    Netlist n;
    n.declare("gnd");
    auto name = [](int i) { return "n" + std::to_string(i); };
    int counter = 0;
    auto random_element = [&](const std::string &a, const std::string &b) {
        std::string id = "E" + std::to_string(counter++);
        switch (kind(rng)) {
            case 0:
                return Element::resistor(id, a, b, 50 * std::pow(10.0, 1.5 * log_u(rng)));
            case 1:
                return Element::capacitor(id, a, b, 1e-12 * std::pow(10.0, 1.5 * log_u(rng)));
            case 2:
                return Element::inductor(id, a, b, 1e-9 * std::pow(10.0, 1.5 * log_u(rng)));
            default:
                return Element::stub(id, a, b, 50 * std::pow(10.0, 0.5 * log_u(rng)), 3e9 + 6e9 * unit(rng),
                                     unit(rng) < 0.5 ? StubTermination::shorted : StubTermination::open);
        }
    };
    // Spanning tree to ground, then extra random edges. A resistor to ground on every node keeps
    // the system well conditioned at any frequency.
    for (int i = 0; i < nodes; ++i) {
        std::uniform_int_distribution<int> parent(-1, i - 1);
        int p = parent(rng);
        n.add(random_element(name(i), p < 0 ? "gnd" : name(p)));
        n.add(Element::resistor("Rg" + std::to_string(i), name(i), "gnd", 1e3 * std::pow(10.0, log_u(rng))));
    }
    std::uniform_int_distribution<int> any(-1, nodes - 1);
    int extra = std::uniform_int_distribution<int>(0, nodes)(rng);
    for (int k = 0; k < extra; ++k) {
        int a = any(rng);
        int b = any(rng);
        if (a == b) {
            continue;
        }
        n.add(random_element(a < 0 ? "gnd" : name(a), b < 0 ? "gnd" : name(b)));
    }
    std::uniform_int_distribution<int> port_node(0, nodes - 1);
    int p1 = port_node(rng);
    int p2 = port_node(rng);
    while (p2 == p1) {
        p2 = port_node(rng);
    }
    n.ports = {{name(p1), 50}, {name(p2), 50}};
    return n;
}

std::vector<std::complex<double>> gaussian_cloud(std::mt19937_64 &rng, std::complex<double> center, double sigma,
                                                 size_t n) {
    std::normal_distribution<double> normal(0, sigma);
    std::vector<std::complex<double>> out(n);
    for (auto &z : out) {
        double re = normal(rng);
        double im = normal(rng);
        z = center + std::complex<double>{re, im};
    }
    return out;
}

double jarque_bera(std::span<const double> x) {
    double n = static_cast<double>(x.size());
    double mean = 0;
    for (double v : x) {
        mean += v;
    }
    mean /= n;
    double m2 = 0, m3 = 0, m4 = 0;
    for (double v : x) {
        double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    double skew = m3 / std::pow(m2, 1.5);
    double kurt = m4 / (m2 * m2);
    return n / 6 * (skew * skew + (kurt - 3) * (kurt - 3) / 4);
}

double exponential_time_constant(std::span<const double> t, std::span<const double> y) {
    double n = static_cast<double>(t.size());
    double st = 0, sl = 0, stt = 0, stl = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        double l = std::log(y[i]);
        st += t[i];
        sl += l;
        stt += t[i] * t[i];
        stl += t[i] * l;
    }
    double slope = (n * stl - st * sl) / (n * stt - st * st);
    return -1 / slope;
}

readoutkit::readout::DispersiveQubit reference_qubit(double t1, double gamma_up) {
    readoutkit::readout::DispersiveQubit q;
    q.chi = readoutkit::kTwoPi * 2e6;
    q.omega_r = readoutkit::kTwoPi * 6.72e9;
    q.kappa = 1 / 37e-9;
    q.t1 = t1;
    q.gamma_up = gamma_up;
    return q;
}

readoutkit::readout::PulseProgram reference_program(const readoutkit::readout::DispersiveQubit &q, double photons,
                                                double t_ring, double t_sustain, double dt) {
    double sustain = readoutkit::readout::amplitude_for_photons(photons, q.kappa, q.chi);
    double ring = t_ring > 0 ? sustain / -std::expm1(-q.kappa * t_ring / 2) : 0;
    readoutkit::readout::PulseProgram p;
    p.dt = dt;
    p.tones.push_back(readoutkit::readout::ring_up_sustain(q.omega_r / readoutkit::kTwoPi, t_ring, ring, t_sustain,
                                                           sustain));
    return p;
}

double binomial_sigma(double p, double n) {
    return std::sqrt(p * (1 - p) / n);
}

}  // namespace rk_test
