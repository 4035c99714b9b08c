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

#include "readoutkit/fidelity/curve.h"

#include <cmath>
#include <stdexcept>

#include "readoutkit/errors.h"
#include "readoutkit/util/csv.h"
#include "readoutkit/util/parallel.h"

namespace readoutkit::fidelity {

namespace {

template <typename F>
void for_each_shot(const readout::ShotSet &set, std::span<const size_t> subset, F &&f) {
    if (subset.empty()) {
        for (const auto &s : set.shots) {
            f(s);
        }
    } else {
        for (size_t i : subset) {
            f(set.shots.at(i));
        }
    }
}

}  // namespace

void FidelityCurve::validate() const {
    for (size_t i = 0; i < t.size(); ++i) {
        for (double e : {eps_s[i], eps_0[i], eps_1[i]}) {
            if (!(e >= 0 && e <= 1)) {
                throw std::logic_error("fidelity curve: error rate outside [0, 1]");
            }
        }
        if (i > 0 && !(t[i] > t[i - 1])) {
            throw std::logic_error("fidelity curve: grid not strictly increasing");
        }
    }
}

std::string FidelityCurve::to_csv() const {
    using util::format_number;
    std::string out = "t_ns,eps_s,eps_0,eps_1,n_shots\n";
    for (size_t i = 0; i < t.size(); ++i) {
        out += util::csv_line({format_number(t[i] * 1e9), format_number(eps_s[i]), format_number(eps_0[i]),
                               format_number(eps_1[i]), std::to_string(n_shots[i])});
    }
    return out;
}

MeanSeries mean_series(const readout::ShotSet &set, size_t tone, std::span<const size_t> subset) {
    size_t bins = set.bins();
    if (bins == 0) {
        throw std::invalid_argument("mean series: shots carry no time series");
    }
    MeanSeries m;
    m.mu0.assign(bins, {});
    m.mu1.assign(bins, {});
    size_t count[2] = {0, 0};
    for_each_shot(set, subset, [&](const readout::ShotRecord &s) {
        int label = s.prepared.at(tone);
        auto &acc = label ? m.mu1 : m.mu0;
        for (size_t b = 0; b < bins; ++b) {
            acc[b] += s.series.at(tone)[b];
        }
        ++count[label];
    });
    if (count[0] == 0 || count[1] == 0) {
        throw std::invalid_argument("mean series: need shots prepared in both states");
    }
    double scale0 = 1 / (static_cast<double>(count[0]) * set.bin_dt());
    double scale1 = 1 / (static_cast<double>(count[1]) * set.bin_dt());
    for (size_t b = 0; b < bins; ++b) {
        m.mu0[b] *= scale0;
        m.mu1[b] *= scale1;
    }
    return m;
}

readout::Window bin_window(const readout::ShotSet &set, size_t tone, WindowMode mode, std::span<const size_t> subset) {
    auto m = mean_series(set, tone, subset);
    return optimal_window(m.mu0, m.mu1, set.bin_dt(), 1 / (2 * set.bin_dt()), mode);
}

std::complex<double> integrate_shot(const readout::ShotRecord &shot, size_t tone, size_t bins,
                                    std::span<const std::complex<double>> weights) {
    const auto &series = shot.series.at(tone);
    std::complex<double> acc;
    for (size_t b = 0; b < bins; ++b) {
        acc += (weights.empty() ? 1.0 : weights[b]) * series[b];
    }
    return acc;
}

LabeledPoints labeled_points(const readout::ShotSet &set, size_t tone, std::span<const std::complex<double>> weights,
                             std::span<const size_t> subset) {
    LabeledPoints p;
    for_each_shot(set, subset, [&](const readout::ShotRecord &s) {
        p.points.push_back(set.bins() > 0 ? integrate_shot(s, tone, set.bins(), weights) : s.iq.at(tone));
        p.labels.push_back(s.prepared.at(tone));
    });
    return p;
}

double misassignment(const CloudFit &fit, const LabeledPoints &points, int state) {
    size_t wrong = 0;
    size_t total = 0;
    for (size_t i = 0; i < points.points.size(); ++i) {
        if (points.labels[i] == state) {
            ++total;
            wrong += fit.classify(points.points[i]) != state;
        }
    }
    return total ? static_cast<double>(wrong) / static_cast<double>(total) : 0.0;
}

FidelityCurve fidelity_vs_time(const readout::ShotSet &set, size_t tone, std::span<const double> grid,
                               std::span<const std::complex<double>> weights, std::span<const size_t> subset) {
    size_t bins = set.bins();
    if (bins == 0) {
        throw std::invalid_argument("fidelity curve: shots carry no time series");
    }
    if (!weights.empty() && weights.size() != bins) {
        throw std::invalid_argument("fidelity curve: weights must have one entry per series bin");
    }
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0) || grid[i] > set.record_length() * (1 + 1e-9)) {
            throw std::invalid_argument("fidelity curve: grid time outside the record");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("fidelity curve: grid must be strictly increasing");
        }
    }
    std::vector<const readout::ShotRecord *> shots;
    for_each_shot(set, subset, [&](const readout::ShotRecord &s) { shots.push_back(&s); });

    FidelityCurve c;
    size_t n = grid.size();
    c.t.assign(grid.begin(), grid.end());
    c.eps_s.assign(n, 0.5);
    c.eps_0.assign(n, 0.5);
    c.eps_1.assign(n, 0.5);
    c.n_shots.assign(n, shots.size());
    std::vector<char> degenerate(n, 0);
    util::parallel_for(n, [&](size_t i) {
        auto used = std::min(bins, static_cast<size_t>(std::floor(grid[i] / set.bin_dt() + 1e-9)));
        LabeledPoints p;
        p.points.reserve(shots.size());
        for (const auto *s : shots) {
            p.points.push_back(integrate_shot(*s, tone, used, weights));
            p.labels.push_back(s->prepared.at(tone));
        }
        try {
            auto fit = fit_clouds(p.points, p.labels);
            c.eps_s[i] = 1 - separation_fidelity(fit);
            c.eps_0[i] = misassignment(fit, p, 0);
            c.eps_1[i] = misassignment(fit, p, 1);
        } catch (const DegenerateFitError &) {
            degenerate[i] = 1;
        }
    });
    c.degenerate.assign(degenerate.begin(), degenerate.end());
    return c;
}

}  // namespace readoutkit::fidelity
