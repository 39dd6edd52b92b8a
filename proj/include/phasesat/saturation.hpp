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

#include <span>
#include <string>
#include <vector>

#include "phasesat/fisher.hpp"
#include "phasesat/interferometer.hpp"
#include "phasesat/tolerances.hpp"

namespace phasesat {

enum class ProjectorClass { Orthogonal, NonOrthogonal, Probe };
enum class ConditionId { T1, T2, WC };
enum class Verdict { Saturates, DoesNotSaturate, IndeterminateFirstOrder };

std::string to_string(ProjectorClass c);  // "h", "q", "probe"
std::string to_string(ConditionId c);     // "T1", "T2", "WC"
std::string to_string(Verdict v);         // "Saturates", ...

struct ProjectorTag {
    std::size_t index = 0;
    std::string label;
    ProjectorClass kind = ProjectorClass::NonOrthogonal;
    double overlap = 0.0;  // |<Y_k|psi_s>|
};

struct Classification {
    std::vector<ProjectorTag> tags;  // one per projector, in set order
    std::vector<std::size_t> h;      // orthogonal, excluding the probe
    std::vector<std::size_t> q;      // non-orthogonal, excluding the probe
    std::vector<std::size_t> probe;
};

/// k is orthogonal iff |<Y_k|psi_s>| < eps_orth; a projector with overlap
/// modulus above 1 - eps_orth is the probe itself.
Classification classify_projectors(const StateVector& psi_s, const ProjectorSet& set, double eps_orth = 1e-10);

struct ConditionResidual {
    std::size_t projector = 0;
    double residual = 0.0;  // >= 0
    double signed_value = 0.0;  // the Im[...] at (l, m) before taking |.|
    ConditionId condition = ConditionId::T1;
    std::size_t l = 0;
    std::size_t m = 0;
    // T1 only: every <Y_k|d_j psi> vanished and the residual comes from the limit.
    bool indeterminate_first_order = false;
    // Limit fallback could not be evaluated (non-convergent or no source).
    bool unresolved = false;
};

/// max_{l<m} |Im<d_l psi|d_m psi>|; 0 for d = 1.
double weak_commutativity_residual(const DerivativeBundle& bundle);

/// Im[<d_l psi|Y><Y|d_m psi>] maximized in modulus over l <= m. Projectors
/// with all first-order overlaps below tol.first_order_zero are flagged and
/// get the limit of Im[<d_l psi|Y><Y|psi>] / |<Y|psi>| along the diagonal.
std::vector<ConditionResidual> theorem1_residuals(const DerivativeBundle& bundle, const ProjectorSet& set,
                                                  std::span<const std::size_t> orthogonal,
                                                  const LimitPolicy& policy = {}, const Tolerances& tol = {});

/// max_l |Im[<d_l psi|Y><Y|psi>] - |<psi|Y>|^2 Im<d_l psi|psi>|.
std::vector<ConditionResidual> theorem2_residuals(const DerivativeBundle& bundle, const ProjectorSet& set,
                                                  std::span<const std::size_t> non_orthogonal);

struct SaturationReport {
    std::vector<double> theta;
    std::vector<ProjectorTag> classification;
    double weak_comm_residual = 0.0;
    std::vector<ConditionResidual> t1;
    std::vector<ConditionResidual> t2;
    Verdict verdict = Verdict::DoesNotSaturate;
    double gap = 0.0;

    /// Throws InternalInconsistency unless Saturates <=> gap < gap_tol.
    void check_consistency(double gap_tol) const;
};

SaturationReport check_saturation(const DerivativeBundle& bundle, const ProjectorSet& set,
                                  const LimitPolicy& policy = {}, const Tolerances& tol = {});
SaturationReport check_saturation(const ParametricState& model, std::span<const double> theta,
                                  const ProjectorSet& set, const LimitPolicy& policy = {},
                                  const Tolerances& tol = {});

}  // namespace phasesat
