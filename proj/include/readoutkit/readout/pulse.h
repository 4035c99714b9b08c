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

#ifndef READOUTKIT_READOUT_PULSE_H
#define READOUTKIT_READOUT_PULSE_H

#include <complex>
#include <optional>
#include <vector>

#include "json.hpp"

namespace readoutkit::readout {

/// Drive envelope epsilon is in units of sqrt(photons) per second.
struct PulseSegment {
    double duration = 0;
    std::complex<double> amplitude;
};

struct Tone {
    double f_hz = 0;
    std::vector<PulseSegment> segments;

    double duration() const;
};

struct PulseProgram {
    double dt = 0.5e-9;
    std::vector<Tone> tones;
    /// Heterodyne reference; defaults to the mean tone frequency.
    std::optional<double> lo_hz;

    /// Throws std::invalid_argument unless dt > 0, there is at least one tone, every segment
    /// duration is a positive multiple of dt, and tone frequencies are distinct.
    void validate() const;

    /// Record length in samples: the longest tone.
    size_t samples() const;
    double duration() const;
    double reference_hz() const;
    /// Tone offset from the reference, rad/s.
    double offset(size_t tone) const;
    /// Piecewise-constant envelope of one tone on the sample grid, zero-padded to samples().
    std::vector<std::complex<double>> envelope(size_t tone) const;
};

/// Strong ring-up segment followed by a sustain segment.
Tone ring_up_sustain(double f_hz, double t_ring, std::complex<double> a_ring, double t_sustain,
                     std::complex<double> a_sustain);

nlohmann::json to_json(const PulseProgram &program);
/// Amplitudes are either a number or [re, im]. Throws std::invalid_argument on bad input.
PulseProgram pulse_from_json(const nlohmann::json &j);

}  // namespace readoutkit::readout

#endif
