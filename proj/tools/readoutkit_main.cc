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

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "readoutkit/cli/commands.h"

int main(int argc, char **argv) {
    CLI::App app{"readoutkit: Purcell-filtered dispersive readout design and simulation"};
    app.require_subcommand(1);

    std::string config;
    uint64_t seed = 0;
    std::string out;
    const char *commands[][2] = {
        {"design", "Analytic design report for a readout chain"},
        {"sweep", "Analytic-vs-circuit T1 comparison and filter pass-band scan"},
        {"simulate", "Monte Carlo readout shots, fidelity curves, error budget"},
        {"analyze", "Cloud fits of a shots CSV"},
    };
    for (auto &c : commands) {
        auto *sub = app.add_subcommand(c[0], c[1]);
        sub->add_option("--config", config, "Run configuration (JSON)")->required();
        sub->add_option("--seed", seed, "Master seed; overrides the config");
        sub->add_option("--out", out, "Output directory; overrides the config");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : readoutkit::cli::kExitConfig;
    }

    readoutkit::cli::CommandOptions options;
    options.config = config;
    auto *sub = app.get_subcommands().front();
    if (sub->count("--seed") > 0) {
        options.seed = seed;
    }
    if (!out.empty()) {
        options.out = out;
    }
    return readoutkit::cli::run_command(sub->get_name(), options, std::cout, std::cerr);
}
