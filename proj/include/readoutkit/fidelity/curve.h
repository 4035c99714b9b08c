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

#ifndef READOUTKIT_FIDELITY_CURVE_H
#define READOUTKIT_FIDELITY_CURVE_H

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "readoutkit/fidelity/clouds.h"
#include "readoutkit/fidelity/window.h"
#include "readoutkit/readout/shots.h"

namespace readoutkit::fidelity {

struct FidelityCurve {
    std::vector<double> t;
    std::vector<double> eps_s;
    std::vector<double> eps_0;
    std::vector<double> eps_1;
    std::vector<size_t> n_shots;
    /// True where the clouds could not be separated; the errors there are reported as 0.5.
    std::vector<bool> degenerate;

    /// Throws std::logic_error if an error rate leaves [0, 1] or the grid is not increasing.
    void validate() const;
    /// Header `t_ns,eps_s,eps_0,eps_1,n_shots`.
    std::string to_csv() const;
};

/// Mean per-bin series of shots prepared in |0> and |1>, expressed per unit time.
struct MeanSeries {
    std::vector<std::complex<double>> mu0;
    std::vector<std::complex<double>> mu1;
};

/// `subset` selects shots by index into set.shots; empty means all.
MeanSeries mean_series(const readout::ShotSet &set, size_t tone, std::span<const size_t> subset = {});

/// Optimal per-bin weights from the empirical mean series.
readout::Window bin_window(const readout::ShotSet &set, size_t tone, WindowMode mode,
                           std::span<const size_t> subset = {});

/// IQ point of one shot integrated over the first `bins` series bins with per-bin weights
/// (uniform when `weights` is empty).
std::complex<double> integrate_shot(const readout::ShotRecord &shot, size_t tone, size_t bins,
                                    std::span<const std::complex<double>> weights);

/// For each t, integrates every shot on [0, t], fits clouds, and reports 1 - F_s and the
/// nearest-centroid misassignment of each prepared state. Throws std::invalid_argument if the set
/// has no series, the grid is not increasing, or a grid time exceeds the record length.
FidelityCurve fidelity_vs_time(const readout::ShotSet &set, size_t tone, std::span<const double> grid,
                               std::span<const std::complex<double>> weights = {},
                               std::span<const size_t> subset = {});

/// Integrated IQ points and labels for the whole record.
struct LabeledPoints {
    std::vector<std::complex<double>> points;
    std::vector<int> labels;
};
LabeledPoints labeled_points(const readout::ShotSet &set, size_t tone, std::span<const std::complex<double>> weights = {},
                             std::span<const size_t> subset = {});

/// Misassignment fraction of shots prepared in `state`.
double misassignment(const CloudFit &fit, const LabeledPoints &points, int state);

}  // namespace readoutkit::fidelity

#endif
