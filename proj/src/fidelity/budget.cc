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

#include "readoutkit/fidelity/budget.h"

#include <cmath>
#include <stdexcept>

namespace readoutkit::fidelity {

ErrorBudget error_budget(double t1, double gamma_up, double t_meas, double t_gap) {
    if (!(t1 > 0) || !(gamma_up >= 0) || !(t_meas >= 0) || !(t_gap >= 0) || !std::isfinite(gamma_up) ||
        !std::isfinite(t_meas) || !std::isfinite(t_gap)) {
        throw std::invalid_argument("error budget: need T1 > 0 and non-negative rates and times");
    }
    ErrorBudget b;
    b.eps_prep = -std::expm1(-gamma_up * t_gap);
    b.eps_decay = -std::expm1(-(t_meas / 2) / t1);
    b.eps_excite = -std::expm1(-gamma_up * t_meas / 2);
    b.f0_ceiling = 1 - b.eps_prep - b.eps_excite;
    b.f1_ceiling = 1 - b.eps_prep - b.eps_decay;
    return b;
}

}  // namespace readoutkit::fidelity
