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

#ifndef READOUTKIT_CIRCUIT_NETLIST_H
#define READOUTKIT_CIRCUIT_NETLIST_H

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace readoutkit::circuit {

enum class ElementKind {
    resistor,
    capacitor,
    inductor,
    voltage_source,
    current_source,
    tline_stub,
};

enum class StubTermination { shorted, open };

/// One two-terminal element.
///
/// `value` is in SI units of the element: ohms, farads, henries, volts, amperes, or the
/// characteristic impedance (ohms) of a transmission-line stub. Sources are phasors: the
/// amplitude is `value` and the phase is `phase_rad`.
///
/// Terminal convention: `nodes[0]` is the positive terminal. A voltage source holds
/// V(nodes[0]) - V(nodes[1]) = value; a current source pushes `value` amperes out of
/// nodes[0] into the circuit and draws it back through nodes[1].
///
/// A tline stub is a uniform lossless line between its two terminals whose far end is
/// shorted or open; its first resonance (quarter wave) is at `stub_f0_hz`.
struct Element {
    std::string name;
    ElementKind kind = ElementKind::resistor;
    std::array<std::string, 2> nodes;
    double value = 0;
    double phase_rad = 0;
    double stub_f0_hz = 0;
    StubTermination termination = StubTermination::shorted;

    bool is_source() const {
        return kind == ElementKind::voltage_source || kind == ElementKind::current_source;
    }
    std::complex<double> phasor() const {
        return std::polar(value, phase_rad);
    }

    static Element resistor(std::string name, std::string a, std::string b, double ohms);
    static Element capacitor(std::string name, std::string a, std::string b, double farads);
    static Element inductor(std::string name, std::string a, std::string b, double henries);
    static Element voltage_source(std::string name, std::string plus, std::string minus, double volts,
                                  double phase_rad = 0);
    static Element current_source(std::string name, std::string out, std::string back, double amps,
                                  double phase_rad = 0);
    static Element stub(std::string name, std::string a, std::string b, double z0, double f0_hz,
                        StubTermination termination);

    bool operator==(const Element &) const = default;
};

struct Port {
    std::string node;
    double z_ref = 50;

    bool operator==(const Port &) const = default;
};

struct Netlist {
    std::vector<std::string> nodes;
    std::string ground = "gnd";
    std::vector<Element> elements;
    std::vector<Port> ports;

    /// Adds `node` to the node list if it is not already declared.
    void declare(const std::string &node);
    /// Declares the element's terminals and appends it.
    void add(Element element);
    bool has_node(const std::string &node) const;
    const Element *find(const std::string &name) const;

    /// Throws InvalidNetlistError unless every invariant holds: declared endpoints, exactly one
    /// ground among the nodes, no floating islands, unique element names, positive finite
    /// R/L/C/Z0/f0 values, positive port impedances on non-ground nodes.
    void validate() const;

    bool operator==(const Netlist &) const = default;
};

const char *kind_name(ElementKind kind);
ElementKind parse_kind(const std::string &name);

}  // namespace readoutkit::circuit

#endif
