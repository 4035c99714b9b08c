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

#ifndef READOUTKIT_ERRORS_H
#define READOUTKIT_ERRORS_H

#include <stdexcept>
#include <string>

namespace readoutkit {

/// A netlist violates a structural invariant (unknown node, floating island, bad value...).
struct InvalidNetlistError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The MNA system cannot be solved reliably at the requested frequency.
struct SingularSystemError : std::runtime_error {
    SingularSystemError(double omega, double condition, std::string null_hint);
    double omega;
    double condition;
    std::string null_hint;
};

/// |Re Y| is below solver precision, so no finite T1 can be reported.
struct EnvironmentallyUnlimitedError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A formula was evaluated exactly on resonance (delta_x = 0), where it is degenerate.
struct OnResonanceError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The envelope integrator step is too coarse for the dynamics.
struct StepSizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two IQ clouds are too close to define a separation axis.
struct DegenerateFitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A least-squares fit did not describe the data.
struct FitFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace readoutkit

#endif
