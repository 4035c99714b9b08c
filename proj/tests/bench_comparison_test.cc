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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "readoutkit/bench/comparison.h"
#include "readoutkit/bench/lorentzian.h"
#include "readoutkit/circuit/sweep.h"
#include "readoutkit/errors.h"
#include "readoutkit/units.h"

namespace {

using namespace readoutkit;
using namespace readoutkit::bench;

const std::vector<double> kTableKappas = {1 / 12e-9, 1 / 23e-9, 1 / 35e-9, 1 / 71e-9};

std::vector<double> grid_hz(double lo, double hi, size_t n) {
    std::vector<double> f(n);
    for (size_t i = 0; i < n; ++i) {
        f[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return f;
}

TEST(Comparison, DetuningGrid) {
    auto g = detuning_grid_hz(100e6, 1e9, 5);
    ASSERT_EQ(g.size(), 10u);
    EXPECT_DOUBLE_EQ(g.front(), -1e9);
    EXPECT_DOUBLE_EQ(g.back(), 1e9);
    EXPECT_NEAR(g[5], 100e6, 1e-3);
    for (size_t i = 1; i < g.size(); ++i) {
        EXPECT_LT(g[i - 1], g[i]);
    }
    EXPECT_THROW(detuning_grid_hz(0, 1e9, 5), std::invalid_argument);
}

TEST(Comparison, RejectsNearResonanceRows) {
    CanonicalChainSpec s;
    std::vector<double> d = {10e6};
    EXPECT_THROW(fig3_sweep(s, d, kTableKappas), std::invalid_argument);
}

// Analytic and circuit T1 agree away from the strong-hybridization region.
TEST(Comparison, AnalyticMatchesCircuitAtModerateDetuning) {
    CanonicalChainSpec s;
    auto d = detuning_grid_hz(400e6, 1e9, 8);
    auto rows = fig3_sweep(s, d, kTableKappas);
    ASSERT_EQ(rows.size(), d.size() * kTableKappas.size());
    for (const auto &r : rows) {
        ASSERT_TRUE(r.ok()) << r.error;
        EXPECT_EQ(r.rel_diff, std::abs(r.t1_analytic - r.t1_numeric) / r.t1_numeric);
        EXPECT_LT(r.rel_diff, 0.10) << r.delta / kTwoPi << " Hz, kappa " << r.kappa_r;
    }
}

TEST(Comparison, NumericT1ScalesInverselyWithKappa) {
    CanonicalChainSpec s;
    std::vector<double> d = {-800e6, -300e6, 500e6};
    auto rows = fig3_sweep(s, d, kTableKappas);
    for (size_t id = 0; id < d.size(); ++id) {
        double ref = rows[id].t1_numeric * rows[id].kappa_r;
        for (size_t ik = 1; ik < kTableKappas.size(); ++ik) {
            const auto &r = rows[ik * d.size() + id];
            EXPECT_NEAR(r.t1_numeric * r.kappa_r / ref, 1, 0.02);
        }
    }
}

TEST(Comparison, CsvIsDeterministic) {
    CanonicalChainSpec s;
    auto d = detuning_grid_hz(100e6, 2e9, 6);
    auto a = comparison_csv(fig3_sweep(s, d, kTableKappas));
    auto b = comparison_csv(fig3_sweep(s, d, kTableKappas));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.substr(0, a.find('\n')), "delta_hz,kappa_inv_ns,t1_analytic_us,t1_numeric_us,rel_diff");
}

TEST(Comparison, PassbandFit) {
    CanonicalChainSpec s;
    s.target_kappa = 1 / 37e-9;
    auto f = grid_hz(4e9, 9e9, 1001);
    auto bare = passband_scan(s, f);
    EXPECT_NEAR(bare.fit.q, 30, 0.05 * 30);
    auto loaded = passband_scan(s, f, true);
    EXPECT_NEAR(loaded.fit.q, 30, 0.15 * 30);
    EXPECT_EQ(bare.to_csv().substr(0, 15), "freq_hz,s21_sq\n");
    EXPECT_THROW(passband_scan(s, grid_hz(6.7e9, 6.9e9, 50)), std::invalid_argument);
}

TEST(Comparison, SymmetricGridLocatesCenter) {
    CanonicalChainSpec s;
    std::vector<double> fine;
    for (int i = -2000; i <= 2000; ++i) {
        fine.push_back(6.8e9 + 0.5e6 * i);
    }
    auto dense = passband_scan(s, fine);
    auto peak = std::max_element(dense.points.begin(), dense.points.end(),
                                 [](const auto &a, const auto &b) { return a.s21_sq < b.s21_sq; });
    double center = peak->f_hz;
    double step = 5e6;
    std::vector<double> f;
    for (int i = -120; i <= 120; ++i) {
        f.push_back(center + step * i);
    }
    auto r = passband_scan(s, f);
    EXPECT_NEAR(r.fit.f0_hz, center, step);
}

TEST(Comparison, QubitFrequencySuppression) {
    CanonicalChainSpec s;
    double ratio = transmission_ratio(s, 6.0e9, 6.8e9);
    EXPECT_LE(ratio, 1 / 25.0);
    double delta = kTwoPi * 0.8e9;
    double predicted = 4 * 900 * delta * delta / (kTwoPi * 6e9 * kTwoPi * 6e9);
    EXPECT_NEAR(1 / ratio / predicted, 1, 0.5);
}

TEST(Comparison, DipRecoversDesignedKappa) {
    for (double inv_ns : {23.0, 37.0, 71.0}) {
        CanonicalChainSpec s;
        s.target_kappa = 1 / (inv_ns * 1e-9);
        double k = measure_kappa_from_dip(s);
        EXPECT_NEAR(k * inv_ns * 1e-9, 1, 0.15) << inv_ns;
    }
}

TEST(Lorentzian, RecoversSyntheticPeak) {
    LorentzianFit truth{6.5e9, 40, 0.8, 0};
    auto f = grid_hz(6e9, 7e9, 301);
    std::vector<double> p;
    for (double x : f) {
        p.push_back(truth(x));
    }
    auto fit = fit_lorentzian(f, p);
    EXPECT_NEAR(fit.f0_hz, 6.5e9, 1e3);
    EXPECT_NEAR(fit.q, 40, 1e-4);
    EXPECT_NEAR(fit.peak, 0.8, 1e-6);
    std::vector<double> flat(f.size(), 1.0);
    for (size_t i = 0; i < flat.size(); ++i) {
        flat[i] = (i % 2) ? 1.0 : 2.0;
    }
    EXPECT_THROW(fit_lorentzian(f, flat), FitFailureError);
}

}  // namespace
