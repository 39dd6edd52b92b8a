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

#include <vector>

#include "phasesat/fisher.hpp"
#include "phasesat/interferometer.hpp"
#include "phasesat/numeric.hpp"
#include "phasesat/tolerances.hpp"

namespace phasesat {

/// |omega_m> = |d_m psi> + |psi><d_m psi|psi> and their Gram matrix.
struct OmegaFrame {
    DerivativeBundle bundle;
    std::vector<StateVector> omegas;
    ComplexMatrix gram;  // Omega_lm = <omega_l|omega_m>

    const StateVector& psi_s() const noexcept { return bundle.psi; }
    double max_imag_gram() const;
};

OmegaFrame omega_frame(const DerivativeBundle& bundle);

struct OptimalMeasurement {
    ProjectorSet set;
    // Projectors [0, in_span) lie in span{psi_s, omega_1..omega_d}; the rest
    // complete the basis.
    std::size_t in_span = 0;
    // coefficients[k][m]: in-span projector k = sum_m coefficients[k][m] omega_m
    // + coefficients[k][d] psi_s. Real by construction.
    std::vector<std::vector<double>> coefficients;
    double gap = 0.0;  // ||F_Q - F||_2 from the internal verification
};

/// Probe, real Gram-Schmidt of the omega-states, then completion from
/// canonical Fock vectors. Throws WeakCommutativityViolated when
/// max|Im Omega| >= tol.weak_commutativity and InternalInconsistency if the
/// result fails to reach F = F_Q within 1e-8.
OptimalMeasurement construct_orthogonal_optimal(const OmegaFrame& frame, const LimitPolicy& policy = {},
                                                const Tolerances& tol = {});

/// Like construct_orthogonal_optimal, but the in-span basis is reflected so
/// that every in-span projector overlaps the probe by at least mix/sqrt(r+1),
/// r being the rank of the omega-states. Requires 0 < mix < 1.
OptimalMeasurement construct_nonorthogonal_optimal(const OmegaFrame& frame, double mix = 0.5,
                                                   const LimitPolicy& policy = {}, const Tolerances& tol = {});

}  // namespace phasesat
