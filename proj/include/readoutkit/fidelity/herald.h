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

#ifndef READOUTKIT_FIDELITY_HERALD_H
#define READOUTKIT_FIDELITY_HERALD_H

#include <complex>
#include <limits>
#include <span>
#include <vector>

#include "readoutkit/fidelity/clouds.h"
#include "readoutkit/readout/shots.h"

namespace readoutkit::fidelity {

struct HeraldResult {
    /// Indices into the input of the shots kept.
    std::vector<size_t> kept;
    double discard_fraction = 0;
};

/// Keeps points whose projection on the calibration axis, measured from the midpoint of the two
/// centroids, is below `threshold`. threshold = 0 is the nearest-centroid rule; +inf keeps all.
HeraldResult herald(std::span<const std::complex<double>> herald_points, const CloudFit &calibration,
                    double threshold = 0);

/// Applies `herald` to the herald IQ points of one tone. Throws std::invalid_argument when the
/// shots carry no herald record.
HeraldResult herald(const readout::ShotSet &set, size_t tone, const CloudFit &calibration, double threshold = 0);

}  // namespace readoutkit::fidelity

#endif
