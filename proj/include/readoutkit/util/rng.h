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

#ifndef READOUTKIT_UTIL_RNG_H
#define READOUTKIT_UTIL_RNG_H

#include <cstdint>
#include <random>

namespace readoutkit::util {

/// splitmix64 finalizer.
uint64_t mix64(uint64_t x);

/// Counter-based stream derivation: the generator for (master, stream) does not depend on
/// how many other streams were drawn or in which order.
std::mt19937_64 stream_rng(uint64_t master_seed, uint64_t stream);

}  // namespace readoutkit::util

#endif
