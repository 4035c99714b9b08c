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

#ifndef READOUTKIT_FIDELITY_WINDOW_H
#define READOUTKIT_FIDELITY_WINDOW_H

#include <complex>
#include <span>
#include <vector>

#include "readoutkit/readout/demux.h"

namespace readoutkit::fidelity {

enum class WindowMode {
    /// w(t) proportional to conj(mu1(t) - mu0(t)).
    matched,
    /// Phase-aligned with the separation, weighted by the gain in boxcar separation fidelity that
    /// each sample contributes.
    empirical,
};

/// Mean demodulated traces on a common grid of step dt; `noise_variance` is the per-quadrature
/// variance of one sample. The result satisfies sum |w| dt = 1. Throws std::invalid_argument for
/// mismatched traces and DegenerateFitError when the traces never separate.
readout::Window optimal_window(std::span<const std::complex<double>> mu0, std::span<const std::complex<double>> mu1,
                               double dt, double noise_variance, WindowMode mode = WindowMode::matched);

/// Squared integrated SNR s^2 / sigma^2 of a linear window applied to traces with white noise of
/// per-quadrature variance `noise_variance` per sample.
double window_snr2(std::span<const std::complex<double>> w, std::span<const std::complex<double>> mu0,
                   std::span<const std::complex<double>> mu1, double dt, double noise_variance);

}  // namespace readoutkit::fidelity

#endif
