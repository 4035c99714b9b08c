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

#include "readoutkit/fidelity/clouds.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "readoutkit/errors.h"

namespace readoutkit::fidelity {

namespace {

// Variance of a unit normal truncated to +-3 sigma.
constexpr double kTrimVariance = 0.973336924;
constexpr double kTrim = 3;

double median(std::vector<double> v) {
    auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    double m = *mid;
    if (v.size() % 2 == 0) {
        m = (m + *std::max_element(v.begin(), mid)) / 2;
    }
    return m;
}

struct Robust {
    double center = 0;
    double sum_sq = 0;
    size_t count = 0;
};

Robust trimmed(const std::vector<double> &x, double center, double sigma) {
    Robust r;
    double sum = 0;
    for (double v : x) {
        if (std::abs(v - center) <= kTrim * sigma) {
            sum += v;
            ++r.count;
        }
    }
    r.center = r.count ? sum / static_cast<double>(r.count) : center;
    for (double v : x) {
        if (std::abs(v - center) <= kTrim * sigma) {
            r.sum_sq += (v - r.center) * (v - r.center);
        }
    }
    return r;
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double ks_distance(std::vector<double> x, double center, double sigma) {
    std::sort(x.begin(), x.end());
    double worst = 0;
    auto n = static_cast<double>(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        double c = normal_cdf((x[i] - center) / sigma);
        worst = std::max({worst, std::abs(c - static_cast<double>(i) / n), std::abs(c - static_cast<double>(i + 1) / n)});
    }
    return worst;
}

}  // namespace

std::complex<double> CloudFit::axis() const {
    auto d = mu1 - mu0;
    double a = std::abs(d);
    return a > 0 ? d / a : std::complex<double>{1, 0};
}

int CloudFit::classify(std::complex<double> point) const {
    return std::norm(point - mu1) < std::norm(point - mu0) ? 1 : 0;
}

CloudFit fit_clouds(std::span<const std::complex<double>> points, std::span<const int> labels, size_t min_per_state) {
    if (points.size() != labels.size()) {
        throw std::invalid_argument("cloud fit: points and labels differ in length");
    }
    std::complex<double> mean[2];
    size_t count[2] = {0, 0};
    for (size_t i = 0; i < points.size(); ++i) {
        if (labels[i] != 0 && labels[i] != 1) {
            throw std::invalid_argument("cloud fit: labels must be 0 or 1");
        }
        mean[labels[i]] += points[i];
        ++count[labels[i]];
    }
    if (count[0] < min_per_state || count[1] < min_per_state) {
        throw std::invalid_argument("cloud fit: need at least " + std::to_string(min_per_state) + " points per state");
    }
    mean[0] /= static_cast<double>(count[0]);
    mean[1] /= static_cast<double>(count[1]);
    std::complex<double> origin = (mean[0] + mean[1]) / 2.0;
    double span = std::abs(mean[1] - mean[0]);
    std::complex<double> u = span > 0 ? (mean[1] - mean[0]) / span : std::complex<double>{1, 0};

    std::vector<double> x[2];
    for (size_t i = 0; i < points.size(); ++i) {
        x[labels[i]].push_back(std::real((points[i] - origin) * std::conj(u)));
    }

    double center[2];
    double sigma = 0;
    {
        double mad = 0;
        for (int j = 0; j < 2; ++j) {
            center[j] = median(x[j]);
            std::vector<double> dev;
            dev.reserve(x[j].size());
            for (double v : x[j]) {
                dev.push_back(std::abs(v - center[j]));
            }
            mad += median(dev);
        }
        sigma = 1.4826 * mad / 2;
    }
    if (!(sigma > 0)) {
        double ss = 0;
        for (int j = 0; j < 2; ++j) {
            for (double v : x[j]) {
                ss += (v - center[j]) * (v - center[j]);
            }
        }
        sigma = std::sqrt(ss / static_cast<double>(x[0].size() + x[1].size()));
    }
    for (int iter = 0; iter < 50 && sigma > 0; ++iter) {
        Robust r0 = trimmed(x[0], center[0], sigma);
        Robust r1 = trimmed(x[1], center[1], sigma);
        double next = std::sqrt((r0.sum_sq + r1.sum_sq) / (static_cast<double>(r0.count + r1.count) * kTrimVariance));
        bool done = std::abs(next - sigma) <= 1e-12 * sigma && std::abs(r0.center - center[0]) <= 1e-12 * sigma &&
                    std::abs(r1.center - center[1]) <= 1e-12 * sigma;
        center[0] = r0.center;
        center[1] = r1.center;
        sigma = next;
        if (done) {
            break;
        }
    }

    CloudFit fit;
    fit.mu0 = origin + u * center[0];
    fit.mu1 = origin + u * center[1];
    fit.sigma = sigma;
    fit.s = std::abs(center[1] - center[0]);
    if (!(sigma > 0) || !(fit.s >= sigma / 100)) {
        throw DegenerateFitError("cloud fit: clouds are indistinguishable (s < sigma / 100)");
    }
    fit.residual = (ks_distance(x[0], center[0], sigma) + ks_distance(x[1], center[1], sigma)) / 2;
    return fit;
}

double separation_fidelity_from_ratio(double s_over_sigma) {
    return 1 - 0.5 * std::erfc(s_over_sigma / (2 * std::sqrt(2.0)));
}

double separation_fidelity(const CloudFit &fit) {
    return separation_fidelity_from_ratio(fit.s / fit.sigma);
}

double ratio_for_separation_fidelity(double f_s) {
    if (!(f_s >= 0.5 && f_s < 1)) {
        throw std::invalid_argument("separation fidelity must lie in [0.5, 1)");
    }
    double lo = 0;
    double hi = 1;
    while (separation_fidelity_from_ratio(hi) < f_s) {
        hi *= 2;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        double mid = (lo + hi) / 2;
        (separation_fidelity_from_ratio(mid) < f_s ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

nlohmann::json to_json(const CloudFit &fit) {
    return {{"mu0", {fit.mu0.real(), fit.mu0.imag()}},
            {"mu1", {fit.mu1.real(), fit.mu1.imag()}},
            {"sigma", fit.sigma},
            {"s", fit.s},
            {"F_s", separation_fidelity(fit)}};
}

}  // namespace readoutkit::fidelity
