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

#ifndef READOUTKIT_READOUT_RESONATOR_H
#define READOUTKIT_READOUT_RESONATOR_H

#include <complex>
#include <limits>
#include <span>
#include <vector>

namespace readoutkit::readout {

/// Qubit in the dispersive limit. The resonator sits at omega_r + chi for state 0 and
/// omega_r - chi for state 1.
struct DispersiveQubit {
    /// Dispersive shift, rad/s.
    double chi = 0;
    /// Loaded resonator frequency, rad/s.
    double omega_r = 0;
    /// Resonator leakage rate, 1/s.
    double kappa = 0;
    double t1 = std::numeric_limits<double>::infinity();
    /// Upward transition rate, 1/s.
    double gamma_up = 0;
    int initial_state = 0;

    /// Throws std::invalid_argument unless kappa > 0, t1 > 0, gamma_up >= 0, state in {0, 1}.
    void validate() const;
    /// delta_j = omega_r + (-1)^j chi - omega_d.
    double detuning(int state, double omega_d) const;
    double rate_out_of(int state) const;
};

/// Largest allowed dt * max(|delta_j|, kappa).
inline constexpr double kMaxStepPhase = 0.1;

/// Throws StepSizeError if dt * max(|delta_0|, |delta_1|, kappa) > kMaxStepPhase.
void check_step(const DispersiveQubit &qubit, double omega_d, double dt);

/// Exact propagator of d(alpha)/dt = lambda alpha + eps over a time tau with eps constant,
/// lambda = -i delta - kappa/2.
class EnvelopeStep {
public:
    EnvelopeStep(double delta, double kappa, double tau);
    std::complex<double> operator()(std::complex<double> alpha, std::complex<double> eps) const {
        return alpha * decay_ + eps * drive_;
    }

private:
    std::complex<double> decay_;
    std::complex<double> drive_;
};

/// alpha(t_k) for t_k = k dt with alpha(0) = alpha0, the envelope held constant on each sample
/// interval, and the qubit frozen in `state`.
std::vector<std::complex<double>> resonator_response(const DispersiveQubit &qubit,
                                                     std::span<const std::complex<double>> envelope,
                                                     double omega_d, double dt, int state,
                                                     std::complex<double> alpha0 = {});

/// alpha at the end of the record (t = N dt).
std::complex<double> final_amplitude(const DispersiveQubit &qubit, std::span<const std::complex<double>> envelope,
                                     double omega_d, double dt, int state, std::complex<double> alpha0 = {});

/// eps / (i delta + kappa/2).
std::complex<double> steady_state(const DispersiveQubit &qubit, std::complex<double> eps, double omega_d, int state);

std::vector<double> photon_number(std::span<const std::complex<double>> alpha);

/// AC Stark shift 2 chi n(t), rad/s.
std::vector<double> stark_shift(std::span<const double> n, double chi);
/// Inverse of stark_shift. Throws std::invalid_argument if chi == 0.
std::vector<double> photons_from_shift(std::span<const double> shift, double chi);

/// Two-level estimate chi = g^2 / Delta. Ignores higher transmon levels.
double chi_two_level(double g, double delta);

/// Sustain amplitude giving steady-state photon number n for the given detuning.
double amplitude_for_photons(double n, double kappa, double delta);

}  // namespace readoutkit::readout

#endif
