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

#ifndef READOUTKIT_READOUT_DEMUX_H
#define READOUTKIT_READOUT_DEMUX_H

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace readoutkit::readout {

using Window = std::vector<std::complex<double>>;

/// Uniform weights 1/(n dt) over `n` samples, so sum |w| dt = 1.
Window boxcar_window(size_t n, double dt);

/// Scales `w` so that sum |w| dt = 1. Throws std::invalid_argument for an all-zero window.
Window normalize_window(Window w, double dt);

struct DemuxResult {
    /// One IQ point per tone.
    std::vector<std::complex<double>> iq;
    std::vector<std::string> warnings;
};

/// IQ_m = sum_k w_m(t_k) z_k exp(+i Delta_m t_k) dt with t_k = k dt. `windows` holds one window
/// per tone, or a single window shared by all tones. Throws std::invalid_argument if a window is
/// longer than the record or not normalized to sum |w| dt = 1 (relative 1e-6). Warns when two
/// tones sit closer than 2 / T_window.
DemuxResult demultiplex(std::span<const std::complex<double>> record, std::span<const double> offsets,
                        const std::vector<Window> &windows, double dt);

/// Tone-collision warnings for the given offsets (rad/s) and window length (s).
std::vector<std::string> collision_warnings(std::span<const double> offsets, double window_length);

}  // namespace readoutkit::readout

#endif
