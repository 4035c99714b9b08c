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

#ifndef READOUTKIT_READOUT_SHOTS_H
#define READOUTKIT_READOUT_SHOTS_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "readoutkit/readout/demux.h"
#include "readoutkit/readout/pulse.h"
#include "readoutkit/readout/resonator.h"

namespace readoutkit::readout {

struct JumpEvent {
    /// Seconds from the start of the main record.
    double time = 0;
    /// State after the jump.
    int state = 0;
};

enum class Preparation {
    /// Every shot prepares each qubit's `initial_state`.
    fixed,
    /// Even shots prepare |0>, odd shots |1>, on every tone.
    alternate,
    /// Each tone takes its own pseudo-random bit of a hash of the shot index.
    independent,
};

/// Prepared label of `tone` in shot `shot`.
int prepared_label(Preparation preparation, int fixed_state, size_t shot, size_t tone);

/// Largest allowed dt * (transition rate).
inline constexpr double kMaxJumpProbability = 0.01;

struct ShotOptions {
    double eta = 1;
    size_t n_shots = 1;
    uint64_t seed = 0;
    bool noiseless = false;
    Preparation preparation = Preparation::fixed;
    /// Probability that a qubit starts the sequence excited.
    double thermal_population = 0;
    /// Run a herald measurement with the same program before the gap.
    bool herald = false;
    /// Free evolution between the herald (or sequence start) and the preparation pulse, s.
    double t_gap = 0;
    /// Samples per stored time-series bin; 0 stores no series.
    size_t series_bin = 1;
    /// One window per tone (or one shared); empty means a boxcar over the whole record.
    std::vector<Window> windows;
};

/// One qubit per tone, in program order. Each resonator is driven only by its own tone.
struct ShotRecord {
    size_t shot = 0;
    /// Prepared label per tone.
    std::vector<int> prepared;
    /// Actual qubit state at the start of the main record.
    std::vector<int> initial;
    std::vector<std::complex<double>> iq;
    /// Empty unless heralding is on.
    std::vector<std::complex<double>> herald_iq;
    std::vector<std::vector<JumpEvent>> jumps;
    /// Per tone, per bin: sum over the bin of z_k exp(+i Delta_m t_k) dt.
    std::vector<std::vector<std::complex<double>>> series;
};

struct ShotSet {
    double dt = 0;
    size_t samples = 0;
    size_t series_bin = 0;
    std::vector<double> offsets;
    std::vector<ShotRecord> shots;
    std::vector<std::string> warnings;

    double bin_dt() const {
        return dt * static_cast<double>(series_bin);
    }
    size_t bins() const;
    double record_length() const {
        return dt * static_cast<double>(samples);
    }
};

/// Monte Carlo readout: jump trajectories, composite heterodyne record, demodulation. Results
/// depend only on (inputs, seed, shot index). Throws std::invalid_argument for n_shots == 0,
/// a qubit count that does not match the tones, or bad options; StepSizeError from the stepper.
ShotSet simulate_shots(const std::vector<DispersiveQubit> &qubits, const PulseProgram &program,
                       const ShotOptions &options);

/// Header `shot,tone,i,q,n_jumps,first_jump_ns`; first_jump_ns is empty when there was no jump.
std::string shots_csv(const ShotSet &set);

/// Header `shot,tone,t_ns,re,im`, one row per bin with t_ns the bin end.
std::string series_csv(const ShotSet &set);

/// Noiseless alpha(t_k) of one tone's resonator with the qubit frozen in `state`.
std::vector<std::complex<double>> mean_amplitude(const DispersiveQubit &qubit, const PulseProgram &program,
                                                 size_t tone, int state);

}  // namespace readoutkit::readout

#endif
