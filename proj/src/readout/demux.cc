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

#include "readoutkit/readout/demux.h"

#include <cmath>
#include <stdexcept>

#include "readoutkit/units.h"

namespace readoutkit::readout {

Window boxcar_window(size_t n, double dt) {
    if (n == 0 || !(dt > 0)) {
        throw std::invalid_argument("boxcar window: need n > 0 and dt > 0");
    }
    return Window(n, 1 / (static_cast<double>(n) * dt));
}

Window normalize_window(Window w, double dt) {
    double sum = 0;
    for (auto x : w) {
        sum += std::abs(x);
    }
    sum *= dt;
    if (!(sum > 0)) {
        throw std::invalid_argument("window: all weights are zero");
    }
    for (auto &x : w) {
        x /= sum;
    }
    return w;
}

std::vector<std::string> collision_warnings(std::span<const double> offsets, double window_length) {
    std::vector<std::string> out;
    double limit = 2 / window_length;
    for (size_t i = 0; i < offsets.size(); ++i) {
        for (size_t j = i + 1; j < offsets.size(); ++j) {
            double df = std::abs(offsets[i] - offsets[j]) / kTwoPi;
            if (df < limit) {
                out.push_back("tones " + std::to_string(i) + " and " + std::to_string(j) + " are " +
                              std::to_string(df / 1e6) + " MHz apart, closer than 2/T_window = " +
                              std::to_string(limit / 1e6) + " MHz");
            }
        }
    }
    return out;
}

DemuxResult demultiplex(std::span<const std::complex<double>> record, std::span<const double> offsets,
                        const std::vector<Window> &windows, double dt) {
    if (windows.size() != 1 && windows.size() != offsets.size()) {
        throw std::invalid_argument("demultiplex: need one window or one per tone");
    }
    size_t longest = 0;
    for (const auto &w : windows) {
        if (w.size() > record.size()) {
            throw std::invalid_argument("demultiplex: window longer than the record");
        }
        double sum = 0;
        for (auto x : w) {
            sum += std::abs(x);
        }
        if (std::abs(sum * dt - 1) > 1e-6) {
            throw std::invalid_argument("demultiplex: window must satisfy sum |w| dt = 1");
        }
        longest = std::max(longest, w.size());
    }
    DemuxResult result;
    result.warnings = collision_warnings(offsets, static_cast<double>(longest) * dt);
    result.iq.resize(offsets.size());
    for (size_t m = 0; m < offsets.size(); ++m) {
        const Window &w = windows.size() == 1 ? windows[0] : windows[m];
        std::complex<double> acc;
        for (size_t k = 0; k < w.size(); ++k) {
            acc += w[k] * record[k] * std::polar(1.0, offsets[m] * static_cast<double>(k) * dt);
        }
        result.iq[m] = acc * dt;
    }
    return result;
}

}  // namespace readoutkit::readout
