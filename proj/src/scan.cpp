// Copyright 2026 The phasesat Authors
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

#include "phasesat/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <thread>

#include "phasesat/error.hpp"

namespace phasesat {

void ScanConfig::validate(std::size_t parameters) const {
    if (parameters < 2) throw Error(ErrorKind::InvalidArgument, "a grid scan needs at least two phases");
    for (int a = 0; a < 2; ++a) {
        if (resolution[a] < 2) throw Error(ErrorKind::InvalidArgument, "resolution must be at least 2 per axis");
        if (!std::isfinite(lo[a]) || !std::isfinite(hi[a]) || !(hi[a] > lo[a])) {
            throw Error(ErrorKind::InvalidArgument, "scan range must satisfy lo < hi");
        }
        if (axes[a] >= parameters) throw Error(ErrorKind::IndexOutOfRange, "swept phase index out of range");
    }
    if (axes[0] == axes[1]) throw Error(ErrorKind::InvalidArgument, "swept phases must differ");
    if (!fixed.empty() && fixed.size() != parameters) {
        throw Error(ErrorKind::DimensionMismatch, "fixed phase vector has the wrong length");
    }
}

double ScanConfig::coordinate(int axis, std::size_t i) const {
    return lo[axis] + (hi[axis] - lo[axis]) * static_cast<double>(i) / static_cast<double>(resolution[axis]);
}

GridResult run_scan(const ParametricState& model, const ProjectorSet& set, const ScanConfig& config) {
    const std::size_t d = model.parameter_count();
    config.validate(d);

    GridResult result;
    result.config = config;
    result.parameters = d;
    const std::size_t n1 = config.resolution[0];
    const std::size_t n2 = config.resolution[1];
    const std::size_t total = n1 * n2;
    result.cells.resize(total);
    std::vector<std::exception_ptr> errors(total);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next.fetch_add(1); c < total; c = next.fetch_add(1)) {
            GridCell& cell = result.cells[c];
            cell.index = {c / n2, c % n2};
            cell.theta = config.fixed.empty() ? std::vector<double>(d, 0.0) : config.fixed;
            cell.theta[config.axes[0]] = config.coordinate(0, cell.index[0]);
            cell.theta[config.axes[1]] = config.coordinate(1, cell.index[1]);
            try {
                cell.pair = fisher_pair(model, cell.theta, set, config.policy, config.tol);
                cell.saturates = cell.pair.gap < config.tol.gap;
            } catch (...) {
                errors[c] = std::current_exception();
            }
        }
    };

    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    result.min_gap = result.cells.front().pair.gap;
    result.max_gap = result.min_gap;
    for (std::size_t c = 0; c < total; ++c) {
        const double g = result.cells[c].pair.gap;
        result.min_gap = std::min(result.min_gap, g);
        result.max_gap = std::max(result.max_gap, g);
        if (result.cells[c].saturates) result.zero_gap_cells.push_back(c);
    }
    return result;
}

GridResult run_scan(const ParametricState& model, const ScanConfig& config) {
    return run_scan(model, ProjectorSet::fock(model.basis()), config);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_scan_csv(std::ostream& out, const GridResult& result) {
    const std::size_t d = result.parameters;
    out << "theta1,theta2,gap,verdict";
    for (const char* prefix : {"f", "fq"})
        for (std::size_t l = 0; l < d; ++l)
            for (std::size_t m = l; m < d; ++m) out << ',' << prefix << l + 1 << m + 1;
    out << '\n';
    const auto& axes = result.config.axes;
    for (const GridCell& cell : result.cells) {
        out << format_double(cell.theta[axes[0]]) << ',' << format_double(cell.theta[axes[1]]) << ','
            << format_double(cell.pair.gap) << ',' << (cell.saturates ? "Saturates" : "DoesNotSaturate");
        for (const RealSymMatrix* m : {&cell.pair.fim, &cell.pair.qfim})
            for (std::size_t l = 0; l < d; ++l)
                for (std::size_t k = l; k < d; ++k) out << ',' << format_double((*m)(l, k));
        out << '\n';
    }
}

Json scan_summary(const GridResult& result) {
    const ScanConfig& c = result.config;
    Json zero = Json::array();
    for (std::size_t i : result.zero_gap_cells) {
        const GridCell& cell = result.cells[i];
        zero.push_back(Json{{"i", cell.index[0]},
                            {"j", cell.index[1]},
                            {"theta1", cell.theta[c.axes[0]]},
                            {"theta2", cell.theta[c.axes[1]]},
                            {"gap", cell.pair.gap}});
    }
    std::size_t direction_dependent = 0;
    for (const GridCell& cell : result.cells) direction_dependent += cell.pair.direction_dependent ? 1 : 0;
    return Json{{"grid",
                 Json{{"axes", c.axes},
                      {"lo", c.lo},
                      {"hi", c.hi},
                      {"resolution", c.resolution},
                      {"end_exclusive", true},
                      {"fixed", c.fixed}}},
                {"cells", result.cells.size()},
                {"min_gap", result.min_gap},
                {"max_gap", result.max_gap},
                {"gap_threshold", c.tol.gap},
                {"direction_dependent_cells", direction_dependent},
                {"zero_gap_cells", std::move(zero)}};
}

}  // namespace phasesat
