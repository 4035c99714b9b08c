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

#include "readoutkit/fidelity/window.h"

#include <cmath>
#include <stdexcept>

#include "readoutkit/errors.h"
#include "readoutkit/fidelity/clouds.h"

namespace readoutkit::fidelity {

readout::Window optimal_window(std::span<const std::complex<double>> mu0, std::span<const std::complex<double>> mu1,
                               double dt, double noise_variance, WindowMode mode) {
    if (mu0.size() != mu1.size() || mu0.empty()) {
        throw std::invalid_argument("optimal window: traces must be non-empty and of equal length");
    }
    if (!(dt > 0) || !(noise_variance > 0)) {
        throw std::invalid_argument("optimal window: dt and noise variance must be positive");
    }
    size_t n = mu0.size();
    readout::Window w(n);
    bool any = false;
    for (size_t k = 0; k < n; ++k) {
        w[k] = std::conj(mu1[k] - mu0[k]);
        any = any || std::abs(w[k]) > 0;
    }
    if (!any) {
        throw DegenerateFitError("optimal window: mean traces never separate");
    }
    if (mode == WindowMode::empirical) {
        std::complex<double> cumulative;
        double previous = 0.5;
        for (size_t k = 0; k < n; ++k) {
            std::complex<double> d = mu1[k] - mu0[k];
            cumulative += d * dt;
            double sigma = std::sqrt(noise_variance * static_cast<double>(k + 1)) * dt;
            double f = separation_fidelity_from_ratio(std::abs(cumulative) / sigma);
            double gain = std::max(f - previous, 0.0);
            previous = std::max(previous, f);
            double mag = std::abs(d);
            w[k] = mag > 0 ? gain * std::conj(d) / mag : std::complex<double>{};
        }
        bool nonzero = false;
        for (auto x : w) {
            nonzero = nonzero || std::abs(x) > 0;
        }
        if (!nonzero) {
            throw DegenerateFitError("optimal window: no fidelity gain anywhere in the record");
        }
    }
    return readout::normalize_window(std::move(w), dt);
}

double window_snr2(std::span<const std::complex<double>> w, std::span<const std::complex<double>> mu0,
                   std::span<const std::complex<double>> mu1, double dt, double noise_variance) {
    if (w.size() > mu0.size() || mu0.size() != mu1.size()) {
        throw std::invalid_argument("window snr: size mismatch");
    }
    std::complex<double> s;
    double var = 0;
    for (size_t k = 0; k < w.size(); ++k) {
        s += w[k] * (mu1[k] - mu0[k]) * dt;
        var += std::norm(w[k]) * dt * dt * noise_variance;
    }
    return std::norm(s) / var;
}

}  // namespace readoutkit::fidelity
