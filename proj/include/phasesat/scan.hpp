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

#pragma once

#include <array>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "phasesat/fisher.hpp"
#include "phasesat/interferometer.hpp"
#include "phasesat/io.hpp"
#include "phasesat/tolerances.hpp"

namespace phasesat {

struct ScanConfig {
    std::array<std::size_t, 2> axes = {0, 1};       // swept phase indices
    std::array<double, 2> lo = {0.0, 0.0};
    std::array<double, 2> hi = {2.0 * std::numbers::pi, 2.0 * std::numbers::pi};
    std::array<std::size_t, 2> resolution = {101, 101};
    std::vector<double> fixed;  // values for every phase; swept entries are overwritten (empty = zeros)
    LimitPolicy policy;
    Tolerances tol;
    unsigned threads = 0;  // 0 = hardware concurrency

    /// Throws InvalidArgument for resolution < 2, empty ranges, bad axes or
    /// a `fixed` vector of the wrong length.
    void validate(std::size_t parameters) const;
    /// Grid value along axis a at index i; ranges are end-exclusive.
    double coordinate(int axis, std::size_t i) const;
};

struct GridCell {
    std::array<std::size_t, 2> index{};
    std::vector<double> theta;
    FisherPair pair;
    bool saturates = false;  // gap < tol.gap
};

struct GridResult {
    ScanConfig config;
    std::size_t parameters = 0;
    std::vector<GridCell> cells;  // row-major: index[0] outer
    double min_gap = 0.0;
    double max_gap = 0.0;
    std::vector<std::size_t> zero_gap_cells;  // cells with gap < tol.gap
};

/// Evaluates fisher_pair on every grid cell with a pool of worker threads.
/// Results do not depend on the thread count. The first failing cell (in
/// row-major order) rethrows its error after all workers finish.
GridResult run_scan(const ParametricState& model, const ProjectorSet& set, const ScanConfig& config);
/// Photon-counting measurement.
GridResult run_scan(const ParametricState& model, const ScanConfig& config);

/// Header theta1,theta2,gap,verdict then the upper triangles f_lm and fq_lm
/// (for d = 2: f11,f12,f22,fq11,fq12,fq22). Numbers use %.17g.
void write_scan_csv(std::ostream& out, const GridResult& result);
Json scan_summary(const GridResult& result);

std::string format_double(double v);  // %.17g

}  // namespace phasesat
