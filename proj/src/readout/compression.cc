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

#include "readoutkit/readout/compression.h"

#include <cmath>
#include <stdexcept>

#include "readoutkit/units.h"

namespace readoutkit::readout {

double watts_to_dbm(double watts) {
    return 10 * std::log10(watts / 1e-3);
}

double dbm_to_watts(double dbm) {
    return 1e-3 * std::pow(10.0, dbm / 10);
}

double ToneLoad::watts() const {
    double scale = power_scale ? *power_scale : kHbar * omega * kappa;
    return scale * photons;
}

CompressionReport check_compression(const std::vector<ToneLoad> &loads, double limit_dbm) {
    CompressionReport r;
    r.limit_dbm = limit_dbm;
    for (const auto &l : loads) {
        r.total_watts += l.watts();
    }
    r.total_dbm = watts_to_dbm(r.total_watts);
    r.exceeds = r.total_watts > dbm_to_watts(limit_dbm);
    if (r.exceeds) {
        r.warning = "total steady-state tone power " + std::to_string(r.total_dbm) + " dBm exceeds the " +
                    std::to_string(limit_dbm) + " dBm compression point";
    }
    return r;
}

std::vector<ToneLoad> tone_loads(const std::vector<DispersiveQubit> &qubits, const PulseProgram &program,
                                 const std::vector<std::optional<double>> &power_scales) {
    if (qubits.size() != program.tones.size()) {
        throw std::invalid_argument("compression: need exactly one qubit per tone");
    }
    std::vector<ToneLoad> out;
    for (size_t m = 0; m < qubits.size(); ++m) {
        std::complex<double> eps;
        for (const auto &s : program.tones[m].segments) {
            if (s.amplitude != std::complex<double>{}) {
                eps = s.amplitude;
            }
        }
        double wd = kTwoPi * program.tones[m].f_hz;
        double n = std::max(std::norm(steady_state(qubits[m], eps, wd, 0)), std::norm(steady_state(qubits[m], eps, wd, 1)));
        ToneLoad l;
        l.photons = n;
        l.omega = wd;
        l.kappa = qubits[m].kappa;
        if (m < power_scales.size()) {
            l.power_scale = power_scales[m];
        }
        out.push_back(l);
    }
    return out;
}

}  // namespace readoutkit::readout
