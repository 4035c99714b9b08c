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

#ifndef READOUTKIT_CLI_CONFIG_H
#define READOUTKIT_CLI_CONFIG_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "readoutkit/bench/canonical_chain.h"
#include "readoutkit/readout/pulse.h"
#include "readoutkit/readout/resonator.h"
#include "readoutkit/readout/shots.h"

namespace readoutkit::cli {

inline constexpr int kSchemaVersion = 1;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DesignConfig {
    /// One spec per report; a `batch` list yields several.
    std::vector<bench::CanonicalChainSpec> specs;
};

struct SweepConfig {
    bench::CanonicalChainSpec spec;
    /// Resonator leakage rates, 1/s.
    std::vector<double> kappas;
    double delta_min_hz = 50e6;
    double delta_max_hz = 2e9;
    size_t points_per_sign = 100;
    double passband_start_hz = 4e9;
    double passband_stop_hz = 9e9;
    size_t passband_points = 1001;
};

enum class WindowChoice { boxcar, matched, empirical };

struct SimulateConfig {
    std::vector<readout::DispersiveQubit> qubits;
    readout::PulseProgram program;
    readout::ShotOptions options;
    WindowChoice window = WindowChoice::boxcar;
    /// Fidelity-curve grid step; defaults to the series bin.
    std::optional<double> grid_step;
    bool write_series = false;
    std::vector<std::optional<double>> power_scales;
    double herald_threshold = 0;
};

struct AnalyzeConfig {
    std::filesystem::path shots_csv;
    readout::Preparation preparation = readout::Preparation::alternate;
    /// Measured |rho10| per tone for efficiency extraction.
    std::vector<double> rho10;
};

struct RunConfig {
    int schema_version = kSchemaVersion;
    std::optional<uint64_t> seed;
    std::filesystem::path output_dir = ".";
    std::filesystem::path base_dir = ".";
    nlohmann::json raw;
};

/// Reads and checks the top level. Throws ConfigError on unreadable files, malformed JSON, or an
/// unrecognized schema_version.
RunConfig load_config(const std::filesystem::path &path);
RunConfig parse_config(const std::string &text, const std::filesystem::path &base_dir = ".");

/// Section parsers; all throw ConfigError.
DesignConfig design_config(const RunConfig &config);
SweepConfig sweep_config(const RunConfig &config);
SimulateConfig simulate_config(const RunConfig &config);
AnalyzeConfig analyze_config(const RunConfig &config);

readout::Preparation parse_preparation(const std::string &name);

}  // namespace readoutkit::cli

#endif
