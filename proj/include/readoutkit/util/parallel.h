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

#ifndef READOUTKIT_UTIL_PARALLEL_H
#define READOUTKIT_UTIL_PARALLEL_H

#include <cstddef>
#include <functional>

namespace readoutkit::util {

/// Worker count: READOUTKIT_THREADS if set and positive, else hardware concurrency.
size_t thread_count();

/// Calls body(k) for k in [0, n). Each index is visited exactly once; callers write results
/// into index-addressed slots so the outcome does not depend on scheduling.
void parallel_for(size_t n, const std::function<void(size_t)> &body);

}  // namespace readoutkit::util

#endif
