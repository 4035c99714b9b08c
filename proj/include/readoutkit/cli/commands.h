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

#ifndef READOUTKIT_CLI_COMMANDS_H
#define READOUTKIT_CLI_COMMANDS_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "readoutkit/cli/config.h"

namespace readoutkit::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitDegenerate = 3,
    kExitRuntime = 4,
};

struct CommandOptions {
    std::filesystem::path config;
    std::optional<uint64_t> seed;
    std::optional<std::filesystem::path> out;
};

/// Loads the config, runs `command` (design, sweep, simulate, analyze), and maps failures to exit
/// codes with a message on `err`. Never throws.
int run_command(const std::string &command, const CommandOptions &options, std::ostream &out, std::ostream &err);

/// The commands proper; they throw on failure.
void cmd_design(const RunConfig &config, const std::filesystem::path &out_dir, std::ostream &out);
void cmd_sweep(const RunConfig &config, const std::filesystem::path &out_dir, std::ostream &out);
void cmd_simulate(const RunConfig &config, const std::filesystem::path &out_dir, std::ostream &out);
void cmd_analyze(const RunConfig &config, const std::filesystem::path &out_dir, std::ostream &out);

}  // namespace readoutkit::cli

#endif
