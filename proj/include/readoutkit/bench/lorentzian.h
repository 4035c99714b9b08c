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

#ifndef READOUTKIT_BENCH_LORENTZIAN_H
#define READOUTKIT_BENCH_LORENTZIAN_H

#include <span>

namespace readoutkit::bench {

/// P(f) = peak / (1 + 4 Q^2 ((f - f0) / f0)^2).
struct LorentzianFit {
    double f0_hz = 0;
    double q = 0;
    double peak = 0;
    /// RMS residual relative to the fitted peak.
    double residual = 0;

    double operator()(double f_hz) const;
};

inline constexpr double kDefaultLorentzianResidual = 0.05;

/// Least-squares Levenberg-Marquardt fit. Throws std::invalid_argument for fewer than four points
/// or mismatched spans, FitFailureError if the fit does not converge or the residual exceeds
/// `max_residual`.
LorentzianFit fit_lorentzian(std::span<const double> f_hz, std::span<const double> power,
                             double max_residual = kDefaultLorentzianResidual);

}  // namespace readoutkit::bench

#endif
