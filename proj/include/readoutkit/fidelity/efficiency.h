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

#ifndef READOUTKIT_FIDELITY_EFFICIENCY_H
#define READOUTKIT_FIDELITY_EFFICIENCY_H

#include <complex>
#include <span>

#include "readoutkit/fidelity/clouds.h"

namespace readoutkit::fidelity {

struct EfficiencyReport {
    /// min(raw, 1).
    double eta = 0;
    double raw = 0;
    /// Set when raw > 1, which means the inputs are inconsistent.
    bool clipped = false;
};

/// eta = (s^2 / (8 sigma^2)) / (-ln |rho10|). Throws std::domain_error unless 0 < |rho10| < 1.
EfficiencyReport extract_efficiency(const CloudFit &fit, double rho10);
EfficiencyReport extract_efficiency(double s_over_sigma, double rho10);

/// |rho10| = exp(-s1^2 / (8 sigma1^2)) of the full-information record seen through window w:
/// s1 = |sum w sqrt(kappa) (alpha1 - alpha0) dt|, sigma1^2 = sum |w|^2 dt / 2.
double ideal_coherence(std::span<const std::complex<double>> alpha0, std::span<const std::complex<double>> alpha1,
                       double kappa, std::span<const std::complex<double>> w, double dt);

}  // namespace readoutkit::fidelity

#endif
