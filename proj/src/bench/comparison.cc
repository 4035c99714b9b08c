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

#include "readoutkit/bench/comparison.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "readoutkit/circuit/mna.h"
#include "readoutkit/errors.h"
#include "readoutkit/units.h"
#include "readoutkit/util/csv.h"
#include "readoutkit/util/parallel.h"

namespace readoutkit::bench {

using util::format_number;

std::vector<double> detuning_grid_hz(double min_hz, double max_hz, size_t per_sign) {
    if (!(min_hz > 0) || !(max_hz > min_hz) || per_sign < 2) {
        throw std::invalid_argument("detuning grid: need 0 < min < max and at least two points per sign");
    }
    std::vector<double> pos(per_sign);
    double ratio = std::log(max_hz / min_hz) / static_cast<double>(per_sign - 1);
    for (size_t i = 0; i < per_sign; ++i) {
        pos[i] = min_hz * std::exp(ratio * static_cast<double>(i));
    }
    pos.back() = max_hz;
    std::vector<double> out;
    out.reserve(2 * per_sign);
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
        out.push_back(-*it);
    }
    out.insert(out.end(), pos.begin(), pos.end());
    return out;
}

std::vector<ComparisonRow> fig3_sweep(const CanonicalChainSpec &spec, std::span<const double> delta_hz,
                                      std::span<const double> kappas) {
    spec.validate();
    for (double d : delta_hz) {
        if (!(std::abs(d) >= kMinDetuningHz)) {
            throw std::invalid_argument("fig3 sweep: detuning grid must avoid |Delta|/2pi < 50 MHz");
        }
    }
    for (double k : kappas) {
        if (!(k > 0) || !std::isfinite(k)) {
            throw std::invalid_argument("fig3 sweep: kappa values must be positive");
        }
    }

    CanonicalChainSpec base = spec;
    base.couplings.c_g = spec.c_g();
    std::vector<circuit::Netlist> environments;
    std::vector<CanonicalChainSpec> per_kappa;
    for (double k : kappas) {
        CanonicalChainSpec s = base;
        s.target_kappa = k;
        s.couplings.c_kappa = solve_kappa_coupling(s, k);
        environments.push_back(build_netlist(s, ChainView::environment));
        per_kappa.push_back(s);
    }

    size_t nd = delta_hz.size();
    std::vector<ComparisonRow> rows(kappas.size() * nd);
    util::parallel_for(rows.size(), [&](size_t idx) {
        size_t ik = idx / nd;
        size_t id = idx % nd;
        CanonicalChainSpec s = per_kappa[ik];
        s.qubit.f_hz = s.resonator.f_hz + delta_hz[id];
        ComparisonRow &row = rows[idx];
        row.delta = kTwoPi * delta_hz[id];
        row.kappa_r = kappas[ik];
        try {
            auto p = s.chain_params();
            row.t1_analytic = design::kappa_t1_lumped(p, s.resonator_form()) / row.kappa_r;
            auto y = circuit::external_admittance(environments[ik], "q", Omega::from_hz(s.qubit.f_hz));
            row.t1_numeric = circuit::t1_limit(y, s.qubit.c_q);
            row.rel_diff = std::abs(row.t1_analytic - row.t1_numeric) / row.t1_numeric;
        } catch (const std::exception &ex) {
            row.error = ex.what();
            row.t1_analytic = row.t1_numeric = row.rel_diff = std::nan("");
        }
    });
    return rows;
}

std::string comparison_csv(const std::vector<ComparisonRow> &rows) {
    std::string out = "delta_hz,kappa_inv_ns,t1_analytic_us,t1_numeric_us,rel_diff\n";
    for (const auto &r : rows) {
        out += util::csv_line({format_number(r.delta / kTwoPi), format_number(1e9 / r.kappa_r),
                               format_number(r.t1_analytic * 1e6), format_number(r.t1_numeric * 1e6),
                               format_number(r.rel_diff)});
    }
    return out;
}

std::string PassbandResult::to_csv() const {
    std::string out = "freq_hz,s21_sq\n";
    for (const auto &p : points) {
        out += util::csv_line({format_number(p.f_hz), format_number(p.s21_sq)});
    }
    return out;
}

namespace {

double s21_sq(const circuit::Netlist &n, double f_hz) {
    auto s = circuit::s_params(n, Omega::from_hz(f_hz));
    return std::norm(s(1, 0));
}

}  // namespace

PassbandResult passband_scan(const CanonicalChainSpec &spec, std::span<const double> f_hz, bool loaded,
                             double max_residual) {
    spec.validate();
    if (f_hz.size() < 4) {
        throw std::invalid_argument("passband scan: need at least four frequencies");
    }
    for (size_t i = 1; i < f_hz.size(); ++i) {
        if (!(f_hz[i] > f_hz[i - 1])) {
            throw std::invalid_argument("passband scan: frequency grid must be strictly increasing");
        }
    }
    if (!(f_hz.front() > 0)) {
        throw std::invalid_argument("passband scan: frequencies must be positive");
    }
    double linewidth = spec.filter.f_hz / spec.filter.q;
    if (f_hz.back() - f_hz.front() < 5 * linewidth) {
        throw std::invalid_argument("passband scan: grid must span at least five filter linewidths");
    }
    auto net = build_netlist(spec, loaded ? ChainView::passband_loaded : ChainView::passband_bare);

    PassbandResult result;
    result.points.resize(f_hz.size());
    util::parallel_for(f_hz.size(), [&](size_t i) {
        result.points[i] = {f_hz[i], s21_sq(net, f_hz[i])};
    });
    std::vector<double> f(f_hz.begin(), f_hz.end());
    std::vector<double> p;
    p.reserve(f.size());
    for (const auto &pt : result.points) {
        p.push_back(pt.s21_sq);
    }
    result.fit = fit_lorentzian(f, p, max_residual);
    return result;
}

double transmission_ratio(const CanonicalChainSpec &spec, double f_a_hz, double f_b_hz) {
    auto net = build_netlist(spec, ChainView::passband_bare);
    return s21_sq(net, f_a_hz) / s21_sq(net, f_b_hz);
}

double measure_kappa_from_dip(const CanonicalChainSpec &spec) {
    auto bare = build_netlist(spec, ChainView::passband_bare);
    auto loaded = build_netlist(spec, ChainView::passband_loaded);
    double kappa = spec.target_kappa_or_throw();
    double half_span = 10 * kappa / kTwoPi;
    constexpr size_t kPoints = 4001;
    std::vector<double> f(kPoints);
    std::vector<double> t(kPoints);
    for (size_t i = 0; i < kPoints; ++i) {
        f[i] = spec.resonator.f_hz - half_span + 2 * half_span * static_cast<double>(i) / (kPoints - 1);
    }
    util::parallel_for(kPoints, [&](size_t i) {
        t[i] = s21_sq(loaded, f[i]) / s21_sq(bare, f[i]);
    });
    auto imin = static_cast<size_t>(std::min_element(t.begin(), t.end()) - t.begin());
    double level = (1 + t[imin]) / 2;
    auto crossing = [&](size_t from, int step) {
        for (size_t i = from;; i += step) {
            size_t j = i + step;
            if (j >= kPoints) {
                throw FitFailureError("resonator dip: half-depth crossing outside the scan window");
            }
            if (t[j] >= level) {
                return f[i] + (level - t[i]) / (t[j] - t[i]) * (f[j] - f[i]);
            }
        }
    };
    double lo = crossing(imin, -1);
    double hi = crossing(imin, 1);
    return kTwoPi * (hi - lo);
}

}  // namespace readoutkit::bench
