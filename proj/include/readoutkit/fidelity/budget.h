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

#ifndef READOUTKIT_FIDELITY_BUDGET_H
#define READOUTKIT_FIDELITY_BUDGET_H

namespace readoutkit::fidelity {

struct ErrorBudget {
    /// Excitation during the gap between herald and preparation: 1 - exp(-gamma_up t_gap).
    double eps_prep = 0;
    /// Decay before the record midpoint: 1 - exp(-(t_meas / 2) / T1).
    double eps_decay = 0;
    /// Excitation before the record midpoint: 1 - exp(-gamma_up t_meas / 2).
    double eps_excite = 0;
    /// 1 - eps_prep - eps_excite.
    double f0_ceiling = 1;
    /// 1 - eps_prep - eps_decay.
    double f1_ceiling = 1;
};

/// T1 may be infinite. Throws std::invalid_argument for non-positive T1, negative rates or times.
ErrorBudget error_budget(double t1, double gamma_up, double t_meas, double t_gap);

}  // namespace readoutkit::fidelity

#endif
