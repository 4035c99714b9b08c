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

#ifndef READOUTKIT_FIDELITY_CLOUDS_H
#define READOUTKIT_FIDELITY_CLOUDS_H

#include <complex>
#include <span>

#include "json.hpp"

namespace readoutkit::fidelity {

struct CloudFit {
    std::complex<double> mu0;
    std::complex<double> mu1;
    /// Common width of the projected marginals.
    double sigma = 0;
    /// |mu1 - mu0|.
    double s = 0;
    /// Kolmogorov-Smirnov distance between the projected data and the fitted Gaussians, averaged
    /// over both states.
    double residual = 0;

    double snr() const {
        return s / sigma;
    }
    /// Unit vector from mu0 towards mu1.
    std::complex<double> axis() const;
    /// Nearest-centroid assignment.
    int classify(std::complex<double> point) const;
};

inline constexpr size_t kMinPointsPerState = 100;

/// Projects onto the axis through the two label means and fits a Gaussian per state with a shared
/// sigma, using 3-sigma trimmed estimates so that points which changed state mid-record do not
/// inflate the width. Throws std::invalid_argument with fewer than `min_per_state` points in
/// either state or mismatched inputs; DegenerateFitError when s < sigma / 100.
CloudFit fit_clouds(std::span<const std::complex<double>> points, std::span<const int> labels,
                    size_t min_per_state = kMinPointsPerState);

/// F_s = 1 - erfc(s / (2 sqrt(2) sigma)) / 2.
double separation_fidelity(const CloudFit &fit);
double separation_fidelity_from_ratio(double s_over_sigma);
/// Inverse of separation_fidelity_from_ratio on [0.5, 1).
double ratio_for_separation_fidelity(double f_s);

/// {mu0: [re, im], mu1: [re, im], sigma, s, F_s}.
nlohmann::json to_json(const CloudFit &fit);

}  // namespace readoutkit::fidelity

#endif
