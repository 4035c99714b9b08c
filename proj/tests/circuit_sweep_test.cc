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

#include "readoutkit/bench/canonical_chain.h"
#include "readoutkit/circuit/mna.h"
#include "readoutkit/circuit/sweep.h"
#include "readoutkit/units.h"

namespace {

using namespace readoutkit;
using namespace readoutkit::circuit;

Netlist rc() {
    Netlist n;
    n.add(Element::resistor("R", "a", "gnd", 50));
    n.add(Element::capacitor("C", "a", "gnd", 1e-12));
    n.ports = {{"a", 50}, {"a", 50}};
    return n;
}

TEST(Sweep, SinglePointMatchesSolve) {
    Netlist n = rc();
    std::vector<Omega> grid = {Omega::from_hz(3e9)};
    auto t = sweep(n, grid, {SweepQuantity::admittance, "a"});
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.rows[0].values[0], external_admittance(n, "a", grid[0]));
    auto s = sweep(n, grid, {SweepQuantity::sparams, ""});
    auto m = scattering_matrix(n, grid[0]);
    EXPECT_EQ(s.rows[0].values[1], m(1, 0));
}

TEST(Sweep, RejectsBadGrids) {
    Netlist n = rc();
    std::vector<Omega> reversed = {Omega::from_hz(2e9), Omega::from_hz(1e9)};
    EXPECT_THROW(sweep(n, reversed, {SweepQuantity::admittance, "a"}), std::invalid_argument);
    std::vector<Omega> empty;
    EXPECT_THROW(sweep(n, empty, {SweepQuantity::admittance, "a"}), std::invalid_argument);
    std::vector<Omega> repeated = {Omega::from_hz(1e9), Omega::from_hz(1e9)};
    EXPECT_THROW(sweep(n, repeated, {SweepQuantity::admittance, "a"}), std::invalid_argument);
}

TEST(Sweep, CollectsRowErrors) {
    Netlist n;
    n.add(Element::voltage_source("V1", "a", "gnd", 1.0));
    n.add(Element::voltage_source("V2", "a", "gnd", 2.0));
    n.add(Element::resistor("R", "a", "gnd", 50));
    n.add(Element::resistor("R2", "b", "gnd", 50));
    auto grid = linear_grid_hz(1e9, 2e9, 3);
    auto t = sweep(n, grid, {SweepQuantity::admittance, "b"});
    ASSERT_EQ(t.rows.size(), 3u);
    for (const auto &r : t.rows) {
        EXPECT_FALSE(r.ok());
    }
    EXPECT_NE(t.to_csv().find("nan"), std::string::npos);
}

TEST(Sweep, CsvHeaders) {
    Netlist n = rc();
    auto grid = linear_grid_hz(1e9, 2e9, 2);
    auto a = sweep(n, grid, {SweepQuantity::admittance, "a"}).to_csv();
    EXPECT_EQ(a.substr(0, a.find('\n')), "freq_hz,re,im");
    auto s = sweep(n, grid, {SweepQuantity::sparams, ""}).to_csv();
    EXPECT_EQ(s.substr(0, s.find('\n')), "freq_hz,s11_re,s11_im,s21_re,s21_im,s12_re,s12_im,s22_re,s22_im");
}

TEST(Sweep, CanonicalChainPassbandAndSuppression) {
    bench::CanonicalChainSpec spec;
    spec.target_kappa = 1 / 37e-9;
    auto n = bench::build_netlist(spec, bench::ChainView::passband_bare);
    auto grid = linear_grid_hz(4e9, 9e9, 1001);
    auto t = sweep(n, grid, {SweepQuantity::sparams, ""});
    double peak = 0;
    double peak_f = 0;
    for (const auto &r : t.rows) {
        ASSERT_TRUE(r.ok());
        double p = std::norm(r.values[1]);
        if (p > peak) {
            peak = p;
            peak_f = r.omega.hz();
        }
    }
    EXPECT_NEAR(peak_f, 6.8e9, 50e6);
    auto at = [&](double f) {
        return std::norm(scattering_matrix(n, Omega::from_hz(f))(1, 0));
    };
    double suppression = at(6.8e9) / at(6.0e9);
    double delta = kTwoPi * 0.8e9, wq = kTwoPi * 6e9;
    double predicted = 4 * 30 * 30 * delta * delta / (wq * wq);
    EXPECT_GT(suppression, predicted / 2);
    EXPECT_LT(suppression, predicted * 2);
}

TEST(Sweep, DeterministicAcrossRuns) {
    bench::CanonicalChainSpec spec;
    spec.target_kappa = 1 / 37e-9;
    auto n = bench::build_netlist(spec, bench::ChainView::passband_loaded);
    auto grid = linear_grid_hz(6e9, 7e9, 101);
    EXPECT_EQ(sweep(n, grid, {SweepQuantity::sparams, ""}).to_csv(), sweep(n, grid, {SweepQuantity::sparams, ""}).to_csv());
}

}  // namespace
