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

#include "readoutkit/fidelity/efficiency.h"

#include <cmath>
#include <stdexcept>

namespace readoutkit::fidelity {

EfficiencyReport extract_efficiency(double s_over_sigma, double rho10) {
    if (!(rho10 > 0 && rho10 < 1)) {
        throw std::domain_error("efficiency: |rho10| must lie strictly between 0 and 1");
    }
    EfficiencyReport r;
    r.raw = (s_over_sigma * s_over_sigma / 8) / -std::log(rho10);
    r.clipped = r.raw > 1;
    r.eta = std::min(r.raw, 1.0);
    return r;
}

EfficiencyReport extract_efficiency(const CloudFit &fit, double rho10) {
    return extract_efficiency(fit.s / fit.sigma, rho10);
}

double ideal_coherence(std::span<const std::complex<double>> alpha0, std::span<const std::complex<double>> alpha1,
                       double kappa, std::span<const std::complex<double>> w, double dt) {
    if (alpha0.size() != alpha1.size() || w.size() > alpha0.size()) {
        throw std::invalid_argument("ideal coherence: size mismatch");
    }
    std::complex<double> s;
    double var = 0;
    for (size_t k = 0; k < w.size(); ++k) {
        s += w[k] * std::sqrt(kappa) * (alpha1[k] - alpha0[k]) * dt;
        var += std::norm(w[k]) * dt / 2;
    }
    return std::exp(-std::norm(s) / (8 * var));
}

}  // namespace readoutkit::fidelity
