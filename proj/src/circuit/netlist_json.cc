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

#include "readoutkit/circuit/netlist_json.h"

#include "readoutkit/errors.h"

namespace readoutkit::circuit {

using nlohmann::json;

json to_json(const Netlist &netlist) {
    json elements = json::array();
    for (const auto &e : netlist.elements) {
        json je{{"name", e.name}, {"kind", kind_name(e.kind)}, {"value", e.value}, {"nodes", e.nodes}};
        if (e.is_source() && e.phase_rad != 0) {
            je["phase_rad"] = e.phase_rad;
        }
        if (e.kind == ElementKind::tline_stub) {
            je["f0_hz"] = e.stub_f0_hz;
            je["termination"] = e.termination == StubTermination::shorted ? "shorted" : "open";
        }
        elements.push_back(std::move(je));
    }
    json ports = json::array();
    for (const auto &p : netlist.ports) {
        ports.push_back({{"node", p.node}, {"z_ref", p.z_ref}});
    }
    return json{{"nodes", netlist.nodes}, {"ground", netlist.ground}, {"elements", elements}, {"ports", ports}};
}

Netlist netlist_from_json(const json &j) {
    try {
        Netlist n;
        n.nodes = j.at("nodes").get<std::vector<std::string>>();
        n.ground = j.at("ground").get<std::string>();
        for (const auto &je : j.at("elements")) {
            Element e;
            e.name = je.at("name").get<std::string>();
            e.kind = parse_kind(je.at("kind").get<std::string>());
            auto nodes = je.at("nodes").get<std::vector<std::string>>();
            if (nodes.size() != 2) {
                throw InvalidNetlistError("element '" + e.name + "' must list exactly two nodes");
            }
            e.nodes = {nodes[0], nodes[1]};
            e.value = je.at("value").get<double>();
            e.phase_rad = je.value("phase_rad", 0.0);
            if (e.kind == ElementKind::tline_stub) {
                e.stub_f0_hz = je.at("f0_hz").get<double>();
                std::string term = je.value("termination", std::string("shorted"));
                if (term == "shorted") {
                    e.termination = StubTermination::shorted;
                } else if (term == "open") {
                    e.termination = StubTermination::open;
                } else {
                    throw InvalidNetlistError("stub '" + e.name + "' has unknown termination '" + term + "'");
                }
            }
            n.elements.push_back(std::move(e));
        }
        if (j.contains("ports")) {
            for (const auto &jp : j.at("ports")) {
                n.ports.push_back(Port{jp.at("node").get<std::string>(), jp.value("z_ref", 50.0)});
            }
        }
        n.validate();
        return n;
    } catch (const json::exception &ex) {
        throw InvalidNetlistError(std::string("malformed netlist: ") + ex.what());
    }
}

std::string serialize(const Netlist &netlist) {
    return to_json(netlist).dump(2) + "\n";
}

Netlist parse_netlist(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &ex) {
        throw InvalidNetlistError(std::string("netlist is not valid JSON: ") + ex.what());
    }
    return netlist_from_json(j);
}

}  // namespace readoutkit::circuit
