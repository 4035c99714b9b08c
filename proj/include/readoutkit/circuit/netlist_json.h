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

#ifndef READOUTKIT_CIRCUIT_NETLIST_JSON_H
#define READOUTKIT_CIRCUIT_NETLIST_JSON_H

#include <string>

#include "json.hpp"
#include "readoutkit/circuit/netlist.h"

namespace readoutkit::circuit {

/// Netlist file format (see docs/netlist_format.md):
///
///     {"nodes": ["in", "gnd"], "ground": "gnd",
///      "elements": [{"name": "R1", "kind": "resistor", "value": 50, "nodes": ["in", "gnd"]},
///                   {"name": "T1", "kind": "tline_stub", "value": 50, "f0_hz": 6.8e9,
///                    "termination": "shorted", "nodes": ["r", "gnd"]}],
///      "ports": [{"node": "in", "z_ref": 50}]}
nlohmann::json to_json(const Netlist &netlist);
Netlist netlist_from_json(const nlohmann::json &j);

std::string serialize(const Netlist &netlist);
Netlist parse_netlist(const std::string &text);

}  // namespace readoutkit::circuit

#endif
