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

namespace phasesat {

// Defaults shared by every module. Individual calls take a copy, so
// overriding one field never leaks into other computations.
struct Tolerances {
    double hermitian = 1e-10;       // |M - M^dagger| entrywise
    double unitary = 1e-10;         // |U^dagger U - I| entrywise
    double normalization = 1e-10;   // | ||psi||^2 - 1 |
    double completeness = 1e-9;     // |sum_k |Y_k><Y_k| - I| entrywise
    double gram_drop = 1e-10;       // Gram-Schmidt drop threshold and Im(Gram) tolerance
    double eps_orth = 1e-10;        // |<Y_k|psi_s>| below this => orthogonal projector
    double first_order_zero = 1e-12;  // |<Y_k|d_j psi_s>| below this for all j => indeterminate
    double saturation = 1e-8;       // residual threshold for Saturates
    double gap = 1e-6;              // ||F_Q - F||_2 threshold for cross-check
    double weak_commutativity = 1e-8;  // max|Im Omega| above which no projective measurement saturates
};

// Numerical evaluation of the 0/0 limits at zero-probability outcomes.
struct LimitPolicy {
    double p_floor = 1e-12;
    std::array<double, 3> steps = {1e-3, 5e-4, 2.5e-4};
    double convergence = 1e-6;
    // Also evaluate along each coordinate axis and flag spread above this.
    bool audit_directions = false;
    // A direction u is degenerate for an outcome when
    // |sum_j <Y|d_j psi> u_j| < this * max_j |<Y|d_j psi>|.
    double degenerate_direction = 1e-3;
    double direction_spread = 1e-5;
    // Overlaps |<Y_k|psi_phi>| below this along the path are treated as
    // exactly zero (outcome never populated).
    double vanishing_overlap = 1e-14;
};

}  // namespace phasesat
