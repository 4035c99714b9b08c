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

#ifndef READOUTKIT_CIRCUIT_SWEEP_H
#define READOUTKIT_CIRCUIT_SWEEP_H

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "readoutkit/circuit/netlist.h"
#include "readoutkit/units.h"

namespace readoutkit::circuit {

enum class SweepQuantity { admittance, sparams };

struct SweepRequest {
    SweepQuantity quantity = SweepQuantity::admittance;
    /// Probe node for admittance sweeps; ignored for S-parameter sweeps.
    std::string probe_node;
};

struct SweepRow {
    Omega omega;
    /// Admittance sweeps: one value. S-parameter sweeps: the matrix in column-major order
    /// (S11, S21, S12, S22 for two ports).
    std::vector<std::complex<double>> values;
    /// Empty when the row solved; otherwise the error that row hit.
    std::string error;

    bool ok() const {
        return error.empty();
    }
};

struct SweepTable {
    SweepQuantity quantity = SweepQuantity::admittance;
    size_t port_count = 0;
    std::vector<SweepRow> rows;

    /// `freq_hz,re,im` for admittance; `freq_hz,s11_re,s11_im,s21_re,s21_im,...` for S-parameters.
    /// Failed rows carry `nan` values.
    std::string to_csv() const;
};

/// Evaluates every grid point independently (in parallel when threads are available).
/// Throws std::invalid_argument for an empty, non-positive or not strictly increasing grid;
/// per-row solver failures are recorded in the row instead of aborting.
SweepTable sweep(const Netlist &netlist, std::span<const Omega> grid, const SweepRequest &request);

/// `points` frequencies evenly spaced over [start_hz, stop_hz].
std::vector<Omega> linear_grid_hz(double start_hz, double stop_hz, size_t points);

}  // namespace readoutkit::circuit

#endif
