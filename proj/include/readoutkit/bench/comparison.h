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

#ifndef READOUTKIT_BENCH_COMPARISON_H
#define READOUTKIT_BENCH_COMPARISON_H

#include <span>
#include <string>
#include <vector>

#include "readoutkit/bench/canonical_chain.h"
#include "readoutkit/bench/lorentzian.h"

namespace readoutkit::bench {

struct ComparisonRow {
    /// Qubit-resonator detuning, rad/s.
    double delta = 0;
    /// Resonator leakage rate, 1/s.
    double kappa_r = 0;
    double t1_analytic = 0;
    double t1_numeric = 0;
    /// |T1_analytic - T1_numeric| / T1_numeric.
    double rel_diff = 0;
    /// Empty unless the circuit solve failed for this row.
    std::string error;

    bool ok() const {
        return error.empty();
    }
};

/// Smallest |Delta|/2pi accepted by fig3_sweep.
inline constexpr double kMinDetuningHz = 50e6;

/// `per_sign` log-spaced points on [min_hz, max_hz] for each sign of the detuning, ascending.
std::vector<double> detuning_grid_hz(double min_hz, double max_hz, size_t per_sign);

/// For each kappa (1/s) the coupling capacitor is re-solved; C_g stays fixed at the spec's value.
/// Throws std::invalid_argument if any |Delta|/2pi < 50 MHz or kappa <= 0. Circuit failures are
/// recorded per row.
std::vector<ComparisonRow> fig3_sweep(const CanonicalChainSpec &spec, std::span<const double> delta_hz,
                                      std::span<const double> kappas);

/// Header `delta_hz,kappa_inv_ns,t1_analytic_us,t1_numeric_us,rel_diff`.
std::string comparison_csv(const std::vector<ComparisonRow> &rows);

struct PassbandPoint {
    double f_hz = 0;
    double s21_sq = 0;
};

struct PassbandResult {
    std::vector<PassbandPoint> points;
    LorentzianFit fit;

    /// Header `freq_hz,s21_sq`.
    std::string to_csv() const;
};

/// |S21|^2 of the filter (optionally loaded by the resonator) with a Lorentzian fit.
/// Throws std::invalid_argument unless the grid is ascending and spans at least five filter
/// linewidths; FitFailureError from the fit.
PassbandResult passband_scan(const CanonicalChainSpec &spec, std::span<const double> f_hz, bool loaded = false,
                             double max_residual = kDefaultLorentzianResidual);

/// |S21(f_a)|^2 / |S21(f_b)|^2 through the bare filter.
double transmission_ratio(const CanonicalChainSpec &spec, double f_a_hz, double f_b_hz);

/// Resonator leakage rate (1/s) measured as the full width at half depth of the resonator dip in
/// the loaded-over-bare filter transmission.
double measure_kappa_from_dip(const CanonicalChainSpec &spec);

}  // namespace readoutkit::bench

#endif
