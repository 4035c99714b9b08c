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

#include "readoutkit/circuit/sweep.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "readoutkit/circuit/mna.h"
#include "readoutkit/util/csv.h"
#include "readoutkit/util/parallel.h"

namespace readoutkit::circuit {

SweepTable sweep(const Netlist &netlist, std::span<const Omega> grid, const SweepRequest &request) {
    if (grid.empty()) {
        throw std::invalid_argument("sweep: frequency grid is empty");
    }
    for (size_t k = 0; k < grid.size(); k++) {
        if (!(grid[k].rad_per_s > 0) || !std::isfinite(grid[k].rad_per_s)) {
            throw std::invalid_argument("sweep: grid frequencies must be positive and finite");
        }
        if (k > 0 && !(grid[k].rad_per_s > grid[k - 1].rad_per_s)) {
            throw std::invalid_argument("sweep: grid must be strictly increasing");
        }
    }
    netlist.validate();

    SweepTable table;
    table.quantity = request.quantity;
    table.port_count = netlist.ports.size();
    if (request.quantity == SweepQuantity::sparams && netlist.ports.empty()) {
        throw std::invalid_argument("sweep: S-parameter sweep needs declared ports");
    }
    table.rows.resize(grid.size());
    util::parallel_for(grid.size(), [&](size_t k) {
        SweepRow &row = table.rows[k];
        row.omega = grid[k];
        try {
            if (request.quantity == SweepQuantity::admittance) {
                row.values = {external_admittance(netlist, request.probe_node, grid[k])};
            } else {
                Eigen::MatrixXcd s = scattering_matrix(netlist, grid[k]);
                row.values.assign(s.data(), s.data() + s.size());
            }
        } catch (const std::exception &ex) {
            row.values.clear();
            row.error = ex.what();
        }
    });
    return table;
}

std::string SweepTable::to_csv() const {
    std::vector<std::string> header{"freq_hz"};
    size_t width = 1;
    if (quantity == SweepQuantity::admittance) {
        header.insert(header.end(), {"re", "im"});
    } else {
        width = port_count * port_count;
        for (size_t col = 0; col < port_count; col++) {
            for (size_t r = 0; r < port_count; r++) {
                std::string name = "s" + std::to_string(r + 1) + std::to_string(col + 1);
                header.push_back(name + "_re");
                header.push_back(name + "_im");
            }
        }
    }
    std::string out = util::csv_line(header);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto &row : rows) {
        std::vector<std::string> cells{util::format_number(row.omega.hz())};
        for (size_t k = 0; k < width; k++) {
            std::complex<double> v = row.ok() ? row.values[k] : std::complex<double>{nan, nan};
            cells.push_back(util::format_number(v.real()));
            cells.push_back(util::format_number(v.imag()));
        }
        out += util::csv_line(cells);
    }
    return out;
}

std::vector<Omega> linear_grid_hz(double start_hz, double stop_hz, size_t points) {
    if (points == 0) {
        return {};
    }
    std::vector<Omega> grid;
    grid.reserve(points);
    for (size_t k = 0; k < points; k++) {
        double f = points == 1 ? start_hz : start_hz + (stop_hz - start_hz) * static_cast<double>(k) / (points - 1);
        grid.push_back(Omega::from_hz(f));
    }
    return grid;
}

}  // namespace readoutkit::circuit
