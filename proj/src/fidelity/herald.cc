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

#include "readoutkit/fidelity/herald.h"

#include <stdexcept>

namespace readoutkit::fidelity {

HeraldResult herald(std::span<const std::complex<double>> herald_points, const CloudFit &calibration,
                    double threshold) {
    HeraldResult r;
    auto mid = (calibration.mu0 + calibration.mu1) / 2.0;
    auto u = calibration.axis();
    for (size_t i = 0; i < herald_points.size(); ++i) {
        double x = std::real((herald_points[i] - mid) * std::conj(u));
        if (x < threshold) {
            r.kept.push_back(i);
        }
    }
    r.discard_fraction =
        herald_points.empty() ? 0 : 1 - static_cast<double>(r.kept.size()) / static_cast<double>(herald_points.size());
    return r;
}

HeraldResult herald(const readout::ShotSet &set, size_t tone, const CloudFit &calibration, double threshold) {
    std::vector<std::complex<double>> points;
    points.reserve(set.shots.size());
    for (const auto &s : set.shots) {
        if (s.herald_iq.size() <= tone) {
            throw std::invalid_argument("herald: shots carry no herald record");
        }
        points.push_back(s.herald_iq[tone]);
    }
    return herald(points, calibration, threshold);
}

}  // namespace readoutkit::fidelity
