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

#ifndef READOUTKIT_UTIL_CSV_H
#define READOUTKIT_UTIL_CSV_H

#include <string>
#include <string_view>
#include <vector>

namespace readoutkit::util {

/// Formats a double with a fixed, locale-independent representation so CSV output is
/// byte-stable across runs. NaN is written as "nan".
std::string format_number(double x);

/// Joins already formatted cells with commas and appends a newline.
std::string csv_line(const std::vector<std::string> &cells);

/// Splits one CSV line on commas, trimming surrounding whitespace. No quoting support.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace readoutkit::util

#endif
