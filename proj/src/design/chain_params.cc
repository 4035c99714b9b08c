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

#include "readoutkit/design/chain_params.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "readoutkit/design/formulas.h"

namespace readoutkit::design {

void ChainParams::validate() const {
    const std::pair<const char *, double> fields[] = {
        {"omega_q", omega_q}, {"omega_r", omega_r}, {"q_filter", q_filter}, {"g", g},         {"kappa_r", kappa_r},
        {"c_q", c_q},         {"c_g", c_g},         {"c_kappa", c_kappa},   {"c_f", c_f},     {"z_q0", z_q0},
        {"z_r0", z_r0},       {"z_f0", z_f0},       {"z_line", z_line},
    };
    for (const auto &[name, v] : fields) {
        if (!(v > 0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string("ChainParams.") + name + " must be positive and finite");
        }
    }
    if (!(std::abs(delta_x()) < 1)) {
        throw std::invalid_argument("ChainParams: |delta_x| must be below 1");
    }
}

ChainParams ChainParams::from_circuit(double omega_q, double omega_r, double q_filter, double c_q, double c_g,
                                      double c_kappa, double z_r0, double z_f0, double kappa_r) {
    ChainParams p;
    p.omega_q = omega_q;
    p.omega_r = omega_r;
    p.q_filter = q_filter;
    p.kappa_r = kappa_r;
    p.c_q = c_q;
    p.c_g = c_g;
    p.c_kappa = c_kappa;
    p.z_r0 = z_r0;
    p.z_f0 = z_f0;
    p.c_f = 1 / (omega_r * z_f0);
    p.z_q0 = 1 / (omega_q * c_q);
    p.g = coupling_g(c_g, c_q, 1 / (omega_r * z_r0), omega_q, omega_r);
    p.z_line = z_r0 * std::numbers::pi / 4;
    return p;
}

}  // namespace readoutkit::design
