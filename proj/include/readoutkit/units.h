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

#ifndef READOUTKIT_UNITS_H
#define READOUTKIT_UNITS_H

#include <numbers>

namespace readoutkit {

inline constexpr double kTwoPi = 2 * std::numbers::pi;
inline constexpr double kHbar = 1.054571817e-34;

/// Angular frequency in rad/s. Construct from Hz explicitly so the unit is never ambiguous.
struct Omega {
    double rad_per_s = 0;

    static constexpr Omega from_hz(double hz) {
        return Omega{kTwoPi * hz};
    }
    static constexpr Omega from_rad(double rad_per_s) {
        return Omega{rad_per_s};
    }
    constexpr double hz() const {
        return rad_per_s / kTwoPi;
    }
    constexpr auto operator<=>(const Omega &) const = default;
};

constexpr double ns(double x) {
    return x * 1e-9;
}
constexpr double us(double x) {
    return x * 1e-6;
}
constexpr double mhz(double x) {
    return x * 1e6;
}
constexpr double ghz(double x) {
    return x * 1e9;
}

}  // namespace readoutkit

#endif
