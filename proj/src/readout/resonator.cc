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

#include "readoutkit/readout/resonator.h"

#include <cmath>
#include <stdexcept>

#include "readoutkit/errors.h"

namespace readoutkit::readout {

void DispersiveQubit::validate() const {
    if (!(kappa > 0) || !std::isfinite(kappa)) {
        throw std::invalid_argument("qubit: kappa must be positive");
    }
    if (!(t1 > 0)) {
        throw std::invalid_argument("qubit: T1 must be positive");
    }
    if (!(gamma_up >= 0) || !std::isfinite(gamma_up)) {
        throw std::invalid_argument("qubit: gamma_up must be non-negative");
    }
    if (initial_state != 0 && initial_state != 1) {
        throw std::invalid_argument("qubit: initial state must be 0 or 1");
    }
    if (!std::isfinite(chi) || !std::isfinite(omega_r)) {
        throw std::invalid_argument("qubit: chi and omega_r must be finite");
    }
}

double DispersiveQubit::detuning(int state, double omega_d) const {
    return omega_r + (state == 0 ? chi : -chi) - omega_d;
}

double DispersiveQubit::rate_out_of(int state) const {
    return state == 1 ? 1 / t1 : gamma_up;
}

void check_step(const DispersiveQubit &qubit, double omega_d, double dt) {
    double worst = std::max({std::abs(qubit.detuning(0, omega_d)), std::abs(qubit.detuning(1, omega_d)), qubit.kappa});
    if (!(dt > 0) || dt * worst > kMaxStepPhase) {
        throw StepSizeError("resonator: dt * max(|delta|, kappa) = " + std::to_string(dt * worst) + " exceeds " +
                            std::to_string(kMaxStepPhase));
    }
}

EnvelopeStep::EnvelopeStep(double delta, double kappa, double tau) {
    std::complex<double> lambda{-kappa / 2, -delta};
    decay_ = std::exp(lambda * tau);
    drive_ = std::abs(lambda * tau) < 1e-8 ? tau * (1.0 + lambda * tau / 2.0) : (decay_ - 1.0) / lambda;
}

std::vector<std::complex<double>> resonator_response(const DispersiveQubit &qubit,
                                                     std::span<const std::complex<double>> envelope,
                                                     double omega_d, double dt, int state,
                                                     std::complex<double> alpha0) {
    qubit.validate();
    check_step(qubit, omega_d, dt);
    EnvelopeStep step(qubit.detuning(state, omega_d), qubit.kappa, dt);
    std::vector<std::complex<double>> out(envelope.size());
    std::complex<double> a = alpha0;
    for (size_t k = 0; k < envelope.size(); ++k) {
        out[k] = a;
        a = step(a, envelope[k]);
    }
    return out;
}

std::complex<double> final_amplitude(const DispersiveQubit &qubit, std::span<const std::complex<double>> envelope,
                                     double omega_d, double dt, int state, std::complex<double> alpha0) {
    qubit.validate();
    check_step(qubit, omega_d, dt);
    EnvelopeStep step(qubit.detuning(state, omega_d), qubit.kappa, dt);
    std::complex<double> a = alpha0;
    for (auto e : envelope) {
        a = step(a, e);
    }
    return a;
}

std::complex<double> steady_state(const DispersiveQubit &qubit, std::complex<double> eps, double omega_d, int state) {
    return eps / std::complex<double>{qubit.kappa / 2, qubit.detuning(state, omega_d)};
}

std::vector<double> photon_number(std::span<const std::complex<double>> alpha) {
    std::vector<double> n(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) {
        n[i] = std::norm(alpha[i]);
    }
    return n;
}

std::vector<double> stark_shift(std::span<const double> n, double chi) {
    std::vector<double> out(n.size());
    for (size_t i = 0; i < n.size(); ++i) {
        out[i] = 2 * chi * n[i];
    }
    return out;
}

std::vector<double> photons_from_shift(std::span<const double> shift, double chi) {
    if (chi == 0) {
        throw std::invalid_argument("stark calibration: chi must be nonzero");
    }
    std::vector<double> out(shift.size());
    for (size_t i = 0; i < shift.size(); ++i) {
        out[i] = shift[i] / (2 * chi);
    }
    return out;
}

double chi_two_level(double g, double delta) {
    if (delta == 0) {
        throw OnResonanceError("chi estimate: zero detuning");
    }
    return g * g / delta;
}

double amplitude_for_photons(double n, double kappa, double delta) {
    return std::sqrt(n * (delta * delta + kappa * kappa / 4));
}

}  // namespace readoutkit::readout
