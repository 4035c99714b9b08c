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

#ifndef READOUTKIT_READOUT_HETERODYNE_H
#define READOUTKIT_READOUT_HETERODYNE_H

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace readoutkit::readout {

/// Per-quadrature noise variance of one heterodyne sample: 1/(2 dt).
double heterodyne_noise_variance(double dt);

/// z_k = sqrt(eta kappa) alpha_k + xi_k. Throws std::invalid_argument unless eta is in (0, 1].
std::vector<std::complex<double>> heterodyne_record(std::span<const std::complex<double>> alpha, double kappa,
                                                    double eta, double dt, std::mt19937_64 &rng,
                                                    bool noiseless = false);
std::vector<std::complex<double>> heterodyne_record(std::span<const std::complex<double>> alpha, double kappa,
                                                    double eta, double dt, uint64_t seed, bool noiseless = false);

/// Adds xi_k to every sample of `record`.
void add_heterodyne_noise(std::span<std::complex<double>> record, double dt, std::mt19937_64 &rng);

void check_efficiency(double eta);

}  // namespace readoutkit::readout

#endif
