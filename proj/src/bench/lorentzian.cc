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

#include "readoutkit/bench/lorentzian.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/LevenbergMarquardt>

#include "readoutkit/errors.h"

namespace readoutkit::bench {

double LorentzianFit::operator()(double f_hz) const {
    double x = (f_hz - f0_hz) / f0_hz;
    return peak / (1 + 4 * q * q * x * x);
}

namespace {

// Parameters are scaled to order one: p = (peak / a0, (f0 - fc) / fc * q0, q / q0).
struct Residuals : Eigen::DenseFunctor<double> {
    const std::vector<double> &f;
    const std::vector<double> &y;
    double a0;
    double fc;
    double q0;

    Residuals(const std::vector<double> &f_, const std::vector<double> &y_, double a0_, double fc_, double q0_)
        : Eigen::DenseFunctor<double>(3, static_cast<int>(f_.size())), f(f_), y(y_), a0(a0_), fc(fc_), q0(q0_) {}

    void unpack(const InputType &p, double &a, double &f0, double &q) const {
        a = p(0) * a0;
        f0 = fc * (1 + p(1) / q0);
        q = p(2) * q0;
    }

    int operator()(const InputType &p, ValueType &out) const {
        double a, f0, q;
        unpack(p, a, f0, q);
        for (size_t i = 0; i < f.size(); ++i) {
            double x = (f[i] - f0) / f0;
            out(static_cast<Eigen::Index>(i)) = (a / (1 + 4 * q * q * x * x) - y[i]) / a0;
        }
        return 0;
    }

    int df(const InputType &p, JacobianType &jac) const {
        double a, f0, q;
        unpack(p, a, f0, q);
        for (size_t i = 0; i < f.size(); ++i) {
            auto r = static_cast<Eigen::Index>(i);
            double x = (f[i] - f0) / f0;
            double d = 1 + 4 * q * q * x * x;
            double dx_df0 = -f[i] / (f0 * f0);
            jac(r, 0) = 1 / d;
            jac(r, 1) = -a / (d * d) * 8 * q * q * x * dx_df0 * (fc / q0) / a0;
            jac(r, 2) = -a / (d * d) * 8 * q * x * x * q0 / a0;
        }
        return 0;
    }
};

}  // namespace

LorentzianFit fit_lorentzian(std::span<const double> f_hz, std::span<const double> power, double max_residual) {
    if (f_hz.size() != power.size()) {
        throw std::invalid_argument("lorentzian fit: frequency and power lengths differ");
    }
    if (f_hz.size() < 4) {
        throw std::invalid_argument("lorentzian fit: need at least four points");
    }
    std::vector<double> f(f_hz.begin(), f_hz.end());
    std::vector<double> y(power.begin(), power.end());
    for (size_t i = 0; i < f.size(); ++i) {
        if (!std::isfinite(f[i]) || !std::isfinite(y[i]) || f[i] <= 0) {
            throw std::invalid_argument("lorentzian fit: non-finite or non-positive input");
        }
    }

    auto imax = static_cast<size_t>(std::max_element(y.begin(), y.end()) - y.begin());
    double a0 = y[imax];
    double fc = f[imax];
    if (!(a0 > 0)) {
        throw FitFailureError("lorentzian fit: no positive peak");
    }
    size_t lo = imax;
    while (lo > 0 && y[lo] > a0 / 2) {
        --lo;
    }
    size_t hi = imax;
    while (hi + 1 < y.size() && y[hi] > a0 / 2) {
        ++hi;
    }
    double fwhm = std::max(f[hi] - f[lo], (f.back() - f.front()) / static_cast<double>(f.size()));
    double q0 = fc / fwhm;

    Residuals functor(f, y, a0, fc, q0);
    Eigen::LevenbergMarquardt<Residuals> lm(functor);
    lm.setMaxfev(2000);
    Eigen::VectorXd p(3);
    p << 1, 0, 1;
    auto status = lm.minimize(p);
    if (status == Eigen::LevenbergMarquardtSpace::ImproperInputParameters) {
        throw FitFailureError("lorentzian fit: improper input");
    }

    LorentzianFit fit;
    functor.unpack(p, fit.peak, fit.f0_hz, fit.q);
    fit.q = std::abs(fit.q);
    if (!std::isfinite(fit.peak) || !std::isfinite(fit.f0_hz) || !std::isfinite(fit.q) || fit.peak <= 0) {
        throw FitFailureError("lorentzian fit: did not converge");
    }
    double ss = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        double r = fit(f[i]) - y[i];
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / static_cast<double>(f.size())) / fit.peak;
    if (fit.residual > max_residual) {
        throw FitFailureError("lorentzian fit: residual " + std::to_string(fit.residual) + " exceeds " +
                              std::to_string(max_residual));
    }
    return fit;
}

}  // namespace readoutkit::bench
