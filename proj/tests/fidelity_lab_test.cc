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

#include <cmath>
#include <limits>
#include <random>

#include "readoutkit/errors.h"
#include "readoutkit/fidelity/clouds.h"
#include "readoutkit/fidelity/curve.h"
#include "readoutkit/fidelity/herald.h"
#include "readoutkit/fidelity/window.h"
#include "readoutkit/readout/shots.h"
#include "test_support.h"

namespace {

using namespace readoutkit;
using namespace readoutkit::fidelity;
using cd = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

readout::ShotSet reference_shots(size_t n, double eta, double t1, double gamma_up, uint64_t seed) {
    auto q = rk_test::reference_qubit(t1, gamma_up);
    auto p = rk_test::reference_program(q);
    readout::ShotOptions o;
    o.n_shots = n;
    o.eta = eta;
    o.seed = seed;
    o.preparation = readout::Preparation::alternate;
    o.series_bin = 10;
    return readout::simulate_shots({q}, p, o);
}

TEST(Window, ConstantSeparationGivesBoxcar) {
    size_t n = 50;
    double dt = 1e-9;
    std::vector<cd> mu0(n, cd{1, 1}), mu1(n, cd{3, -1});
    auto w = optimal_window(mu0, mu1, dt, 1 / (2 * dt));
    ASSERT_EQ(w.size(), n);
    cd phase = std::conj(mu1[0] - mu0[0]) / std::abs(mu1[0] - mu0[0]);
    for (auto x : w) {
        EXPECT_LT(std::abs(x - phase / (n * dt)), 1e-6 / (n * dt));
    }
}

TEST(Window, ZeroWhereTracesCoincide) {
    size_t n = 40;
    double dt = 1e-9;
    std::vector<cd> mu0(n, cd{0, 0}), mu1(n, cd{0, 0});
    for (size_t k = 10; k < n; ++k) {
        mu1[k] = cd{0.1 * k, 0};
    }
    for (WindowMode mode : {WindowMode::matched, WindowMode::empirical}) {
        auto w = optimal_window(mu0, mu1, dt, 1 / (2 * dt), mode);
        double total = 0;
        for (size_t k = 0; k < n; ++k) {
            if (k < 10) {
                EXPECT_EQ(w[k], cd{});
            }
            total += std::abs(w[k]) * dt;
        }
        EXPECT_NEAR(total, 1, 1e-12);
    }
    std::vector<cd> same(n, cd{2, 0});
    EXPECT_THROW(optimal_window(same, same, dt, 1), DegenerateFitError);
}

TEST(Window, MatchedBeatsBoxcarAnalytically) {
    auto q = rk_test::reference_qubit();
    auto p = rk_test::reference_program(q);
    auto a0 = readout::mean_amplitude(q, p, 0, 0);
    auto a1 = readout::mean_amplitude(q, p, 0, 1);
    double noise = 1 / (2 * p.dt);
    auto matched = optimal_window(a0, a1, p.dt, noise);
    auto empirical = optimal_window(a0, a1, p.dt, noise, WindowMode::empirical);
    auto box = readout::boxcar_window(a0.size(), p.dt);
    double m = window_snr2(matched, a0, a1, p.dt, noise);
    EXPECT_GE(m, window_snr2(box, a0, a1, p.dt, noise));
    EXPECT_GE(m, window_snr2(empirical, a0, a1, p.dt, noise) * (1 - 1e-12));
}

TEST(Window, MatchedBeatsBoxcarOnShots) {
    auto set = reference_shots(10000, 0.126, kInf, 0, 31);
    auto w = bin_window(set, 0, WindowMode::matched);
    auto snr = [&](std::span<const cd> weights) {
        auto lp = labeled_points(set, 0, weights);
        return fit_clouds(lp.points, lp.labels).snr();
    };
    double matched = snr(w);
    double box = snr({});
    // One standard error of the ratio estimate at 5000 shots per state is about 1%.
    EXPECT_GE(matched, box * 0.99);
}

TEST(FidelityCurve, StartsAtChanceAndImprovesWithTime) {
    auto set = reference_shots(8000, 0.126, kInf, 0, 41);
    auto w = bin_window(set, 0, WindowMode::matched);
    std::vector<double> grid;
    for (int i = 0; i <= 28; ++i) {
        grid.push_back(5e-9 * i);
    }
    auto c = fidelity_vs_time(set, 0, grid, w);
    EXPECT_NO_THROW(c.validate());
    EXPECT_TRUE(c.degenerate[0]);
    EXPECT_EQ(c.eps_s[0], 0.5);
    for (size_t i = 1; i < grid.size(); ++i) {
        // Matched weights make the signal-to-noise ratio non-decreasing.
        EXPECT_LE(c.eps_s[i], c.eps_s[i - 1] + 0.002) << grid[i];
        EXPECT_EQ(c.n_shots[i], 8000u);
    }
    EXPECT_LT(c.eps_s.back(), 0.01);
    auto csv = c.to_csv();
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "t_ns,eps_s,eps_0,eps_1,n_shots");
    std::vector<double> bad = {10e-9, 5e-9};
    EXPECT_THROW(fidelity_vs_time(set, 0, bad, w), std::invalid_argument);
    std::vector<double> late = {1e-6};
    EXPECT_THROW(fidelity_vs_time(set, 0, late, w), std::invalid_argument);
}

TEST(FidelityCurve, ValidateRejectsOutOfRange) {
    FidelityCurve c;
    c.t = {1e-9, 2e-9};
    c.eps_s = {0.5, 1.2};
    c.eps_0 = {0.5, 0.1};
    c.eps_1 = {0.5, 0.1};
    c.n_shots = {10, 10};
    c.degenerate = {false, false};
    EXPECT_THROW(c.validate(), std::logic_error);
}

class HeraldTest : public ::testing::Test {
  protected:
    CloudFit calibration() const {
        CloudFit fit;
        fit.mu0 = {0, 0};
        fit.mu1 = std::polar(5.76, 0.4);
        fit.sigma = 1;
        fit.s = 5.76;
        return fit;
    }
    double eps() const {
        return 0.5 * std::erfc(5.76 / (2 * std::sqrt(2.0)));
    }
};

TEST_F(HeraldTest, AllGroundDiscardsOnlyMisclassified) {
    std::mt19937_64 rng(8);
    const size_t n = 100000;
    auto pts = rk_test::gaussian_cloud(rng, {0, 0}, 1, n);
    auto r = herald(pts, calibration());
    EXPECT_NEAR(r.discard_fraction, eps(), 3 * rk_test::binomial_sigma(eps(), n));
    EXPECT_EQ(r.kept.size() + static_cast<size_t>(std::llround(r.discard_fraction * n)), n);
}

TEST_F(HeraldTest, ThermalPopulationIsDiscarded) {
    std::mt19937_64 rng(9);
    const size_t n = 100000;
    std::bernoulli_distribution excited(0.07);
    std::vector<cd> pts;
    for (size_t i = 0; i < n; ++i) {
        pts.push_back(rk_test::gaussian_cloud(rng, excited(rng) ? calibration().mu1 : calibration().mu0, 1, 1)[0]);
    }
    auto r = herald(pts, calibration());
    double expected = 0.07 * (1 - eps()) + 0.93 * eps();
    EXPECT_NEAR(r.discard_fraction, expected, 3 * rk_test::binomial_sigma(expected, n));
    auto open = herald(pts, calibration(), kInf);
    EXPECT_EQ(open.discard_fraction, 0);
    EXPECT_EQ(open.kept.size(), n);
}

TEST(Herald, NeverWorsensGroundStateError) {
    auto q = rk_test::reference_qubit(10e-6, 1 / 100e-6);
    auto p = rk_test::reference_program(q);
    readout::ShotOptions o;
    o.n_shots = 20000;
    o.eta = 0.126;
    o.seed = 3;
    o.preparation = readout::Preparation::alternate;
    o.series_bin = 10;
    o.thermal_population = 0.07;
    o.herald = true;
    o.t_gap = 500e-9;
    auto set = readout::simulate_shots({q}, p, o);
    auto w = bin_window(set, 0, WindowMode::matched);
    auto all = labeled_points(set, 0, w);
    auto fit = fit_clouds(all.points, all.labels);
    std::vector<std::complex<double>> iq;
    std::vector<int> labels;
    for (const auto &r : set.shots) {
        iq.push_back(r.iq[0]);
        labels.push_back(r.prepared[0]);
    }
    auto h = herald(set, 0, fit_clouds(iq, labels));
    EXPECT_NEAR(h.discard_fraction, 0.07, 0.02);
    auto kept = labeled_points(set, 0, w, h.kept);
    double before = misassignment(fit, all, 0);
    double after = misassignment(fit, kept, 0);
    double n0 = static_cast<double>(kept.points.size()) / 2;
    EXPECT_LE(after, before + 2 * rk_test::binomial_sigma(before, n0));
    EXPECT_LT(after, before);
}

}  // namespace
