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

#include "readoutkit/util/csv.h"

#include <cmath>
#include <cstdio>

namespace readoutkit::util {

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string csv_line(const std::vector<std::string> &cells) {
    std::string out;
    for (size_t k = 0; k < cells.size(); k++) {
        if (k) {
            out += ',';
        }
        out += cells[k];
    }
    out += '\n';
    return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t end = line.find(',', start);
        std::string_view cell = line.substr(start, end == std::string_view::npos ? line.npos : end - start);
        while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) {
            cell.remove_prefix(1);
        }
        while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\r' || cell.back() == '\t')) {
            cell.remove_suffix(1);
        }
        out.emplace_back(cell);
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return out;
}

}  // namespace readoutkit::util
