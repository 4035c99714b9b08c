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

#include "readoutkit/circuit/netlist.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "readoutkit/errors.h"

namespace readoutkit::circuit {

Element Element::resistor(std::string name, std::string a, std::string b, double ohms) {
    return Element{std::move(name), ElementKind::resistor, {std::move(a), std::move(b)}, ohms};
}
Element Element::capacitor(std::string name, std::string a, std::string b, double farads) {
    return Element{std::move(name), ElementKind::capacitor, {std::move(a), std::move(b)}, farads};
}
Element Element::inductor(std::string name, std::string a, std::string b, double henries) {
    return Element{std::move(name), ElementKind::inductor, {std::move(a), std::move(b)}, henries};
}
Element Element::voltage_source(std::string name, std::string plus, std::string minus, double volts,
                                 double phase_rad) {
    Element e{std::move(name), ElementKind::voltage_source, {std::move(plus), std::move(minus)}, volts};
    e.phase_rad = phase_rad;
    return e;
}
Element Element::current_source(std::string name, std::string out, std::string back, double amps,
                                 double phase_rad) {
    Element e{std::move(name), ElementKind::current_source, {std::move(out), std::move(back)}, amps};
    e.phase_rad = phase_rad;
    return e;
}
Element Element::stub(std::string name, std::string a, std::string b, double z0, double f0_hz,
                      StubTermination termination) {
    Element e{std::move(name), ElementKind::tline_stub, {std::move(a), std::move(b)}, z0};
    e.stub_f0_hz = f0_hz;
    e.termination = termination;
    return e;
}

void Netlist::declare(const std::string &node) {
    if (!has_node(node)) {
        nodes.push_back(node);
    }
}

void Netlist::add(Element element) {
    declare(element.nodes[0]);
    declare(element.nodes[1]);
    elements.push_back(std::move(element));
}

bool Netlist::has_node(const std::string &node) const {
    return std::find(nodes.begin(), nodes.end(), node) != nodes.end();
}

const Element *Netlist::find(const std::string &name) const {
    for (const auto &e : elements) {
        if (e.name == name) {
            return &e;
        }
    }
    return nullptr;
}

void Netlist::validate() const {
    std::set<std::string> declared;
    for (const auto &n : nodes) {
        if (n.empty()) {
            throw InvalidNetlistError("empty node name");
        }
        if (!declared.insert(n).second) {
            throw InvalidNetlistError("node '" + n + "' declared twice");
        }
    }
    if (ground.empty() || !declared.count(ground)) {
        throw InvalidNetlistError("ground node '" + ground + "' is not among the declared nodes");
    }

    std::set<std::string> names;
    std::map<std::string, std::string> parent;
    for (const auto &n : nodes) {
        parent[n] = n;
    }
    auto root = [&](std::string n) {
        while (parent[n] != n) {
            parent[n] = parent[parent[n]];
            n = parent[n];
        }
        return n;
    };

    for (const auto &e : elements) {
        if (e.name.empty()) {
            throw InvalidNetlistError("element with empty name");
        }
        if (!names.insert(e.name).second) {
            throw InvalidNetlistError("element name '" + e.name + "' used twice");
        }
        for (const auto &n : e.nodes) {
            if (!declared.count(n)) {
                throw InvalidNetlistError("element '" + e.name + "' references undeclared node '" + n + "'");
            }
        }
        if (e.nodes[0] == e.nodes[1]) {
            throw InvalidNetlistError("element '" + e.name + "' has both terminals on node '" + e.nodes[0] + "'");
        }
        if (!std::isfinite(e.value) || !std::isfinite(e.phase_rad)) {
            throw InvalidNetlistError("element '" + e.name + "' has a non-finite value");
        }
        switch (e.kind) {
            case ElementKind::resistor:
            case ElementKind::capacitor:
            case ElementKind::inductor:
                if (!(e.value > 0)) {
                    throw InvalidNetlistError("element '" + e.name + "' must have a positive value");
                }
                break;
            case ElementKind::tline_stub:
                if (!(e.value > 0)) {
                    throw InvalidNetlistError("stub '" + e.name + "' must have a positive characteristic impedance");
                }
                if (!(e.stub_f0_hz > 0) || !std::isfinite(e.stub_f0_hz)) {
                    throw InvalidNetlistError("stub '" + e.name + "' must have a positive fundamental frequency");
                }
                break;
            case ElementKind::voltage_source:
            case ElementKind::current_source:
                break;
        }
        parent[root(e.nodes[0])] = root(e.nodes[1]);
    }

    std::string g = root(ground);
    for (const auto &n : nodes) {
        if (root(n) != g) {
            throw InvalidNetlistError("node '" + n + "' is not connected to ground");
        }
    }

    for (const auto &p : ports) {
        if (!declared.count(p.node)) {
            throw InvalidNetlistError("port references undeclared node '" + p.node + "'");
        }
        if (p.node == ground) {
            throw InvalidNetlistError("port cannot sit on the ground node");
        }
        if (!(p.z_ref > 0) || !std::isfinite(p.z_ref)) {
            throw InvalidNetlistError("port reference impedance must be real and positive");
        }
    }
}

const char *kind_name(ElementKind kind) {
    switch (kind) {
        case ElementKind::resistor:
            return "resistor";
        case ElementKind::capacitor:
            return "capacitor";
        case ElementKind::inductor:
            return "inductor";
        case ElementKind::voltage_source:
            return "voltage_source";
        case ElementKind::current_source:
            return "current_source";
        case ElementKind::tline_stub:
            return "tline_stub";
    }
    return "?";
}

ElementKind parse_kind(const std::string &name) {
    for (auto k : {ElementKind::resistor, ElementKind::capacitor, ElementKind::inductor,
                   ElementKind::voltage_source, ElementKind::current_source, ElementKind::tline_stub}) {
        if (name == kind_name(k)) {
            return k;
        }
    }
    throw InvalidNetlistError("unknown element kind '" + name + "'");
}

}  // namespace readoutkit::circuit
