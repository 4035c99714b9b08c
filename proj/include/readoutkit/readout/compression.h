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

#ifndef READOUTKIT_READOUT_COMPRESSION_H
#define READOUTKIT_READOUT_COMPRESSION_H

#include <optional>
#include <string>
#include <vector>

#include "readoutkit/readout/pulse.h"
#include "readoutkit/readout/resonator.h"

namespace readoutkit::readout {

/// Amplifier 1 dB compression point.
inline constexpr double kCompressionDbm = -107;

double watts_to_dbm(double watts);
double dbm_to_watts(double dbm);

struct ToneLoad {
    /// Steady-state photon number.
    double photons = 0;
    /// Watts per photon; hbar omega kappa when absent.
    std::optional<double> power_scale;
    double omega = 0;
    double kappa = 0;

    double watts() const;
};

struct CompressionReport {
    double total_watts = 0;
    double total_dbm = 0;
    double limit_dbm = kCompressionDbm;
    bool exceeds = false;
    /// Empty unless the limit is exceeded.
    std::string warning;
};

CompressionReport check_compression(const std::vector<ToneLoad> &loads, double limit_dbm = kCompressionDbm);

/// Steady-state photon number of each tone's last driven segment, taking the larger of the two
/// qubit states.
std::vector<ToneLoad> tone_loads(const std::vector<DispersiveQubit> &qubits, const PulseProgram &program,
                                 const std::vector<std::optional<double>> &power_scales = {});

}  // namespace readoutkit::readout

#endif
