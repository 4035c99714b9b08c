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

#include "readoutkit/readout/heterodyne.h"

#include <cmath>
#include <stdexcept>

namespace readoutkit::readout {

double heterodyne_noise_variance(double dt) {
    return 1 / (2 * dt);
}

void check_efficiency(double eta) {
    if (!(eta > 0 && eta <= 1)) {
        throw std::invalid_argument("heterodyne: efficiency must lie in (0, 1]");
    }
}

void add_heterodyne_noise(std::span<std::complex<double>> record, double dt, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(heterodyne_noise_variance(dt)));
    for (auto &z : record) {
        double re = normal(rng);
        double im = normal(rng);
        z += std::complex<double>{re, im};
    }
}

std::vector<std::complex<double>> heterodyne_record(std::span<const std::complex<double>> alpha, double kappa,
                                                    double eta, double dt, std::mt19937_64 &rng, bool noiseless) {
    check_efficiency(eta);
    if (!(kappa > 0) || !(dt > 0)) {
        throw std::invalid_argument("heterodyne: kappa and dt must be positive");
    }
    double gain = std::sqrt(eta * kappa);
    std::vector<std::complex<double>> z(alpha.size());
    for (size_t k = 0; k < alpha.size(); ++k) {
        z[k] = gain * alpha[k];
    }
    if (!noiseless) {
        add_heterodyne_noise(z, dt, rng);
    }
    return z;
}

std::vector<std::complex<double>> heterodyne_record(std::span<const std::complex<double>> alpha, double kappa,
                                                    double eta, double dt, uint64_t seed, bool noiseless) {
    std::mt19937_64 rng(seed);
    return heterodyne_record(alpha, kappa, eta, dt, rng, noiseless);
}

}  // namespace readoutkit::readout
