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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phasesat/fock.hpp"
#include "phasesat/interferometer.hpp"
#include "phasesat/numeric.hpp"
#include "phasesat/tolerances.hpp"

namespace phasesat {

/// Rank-one projectors {|Y_k><Y_k|}.
class ProjectorSet {
public:
    ProjectorSet() = default;
    /// Every projector must be normalized within `tol.normalization`;
    /// completeness is measured and recorded, not required.
    ProjectorSet(BasisPtr basis, std::vector<StateVector> projectors, std::vector<std::string> labels = {},
                 const Tolerances& tol = {});

    /// Photon counting: one projector per Fock state, in basis order.
    static ProjectorSet fock(BasisPtr basis);

    const FockBasis& basis() const { return *basis_; }
    const BasisPtr& basis_ptr() const noexcept { return basis_; }
    std::size_t size() const noexcept { return projectors_.size(); }
    const StateVector& operator[](std::size_t k) const { return projectors_.at(k); }
    const std::vector<StateVector>& projectors() const noexcept { return projectors_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    bool complete() const noexcept { return complete_; }
    /// max_ij |(sum_k |Y_k><Y_k| - I)_ij|
    double completeness_error() const noexcept { return completeness_error_; }

private:
    BasisPtr basis_;
    std::vector<StateVector> projectors_;
    std::vector<std::string> labels_;
    bool complete_ = false;
    double completeness_error_ = 0.0;
};

/// [F_Q]_lm = 4 Re<d_l psi|d_m psi> + 4 <d_l psi|psi><d_m psi|psi>.
RealSymMatrix qfim(const DerivativeBundle& bundle);

/// P(k|theta) = |<Y_k|psi_s>|^2.
std::vector<double> probabilities(const StateVector& psi_s, const ProjectorSet& set);

struct FimResult {
    RealSymMatrix fim;
    // Outcomes with P(k|theta) < p_floor that went through the limit.
    std::vector<std::size_t> singular_outcomes;
    bool direction_dependent = false;
};

/// Classical Fisher information of the outcome distribution. Outcomes with
/// P below `policy.p_floor` contribute the limit of their ratio along the
/// diagonal direction (1,...,1)/sqrt(d), or along the first fallback
/// direction that is not degenerate for that outcome (see LimitPolicy);
/// those whose first-order overlaps all vanish contribute zero.
FimResult fim(const DerivativeBundle& bundle, const ProjectorSet& set, const LimitPolicy& policy = {},
              const Tolerances& tol = {});

/// FIM from central differences of P(k|theta). Requires min P > 10 delta.
RealSymMatrix fim_finite_difference(const ParametricState& model, std::span<const double> theta,
                                    const ProjectorSet& set, double delta);

struct FisherPair {
    std::vector<double> theta;
    RealSymMatrix fim;
    RealSymMatrix qfim;
    double gap = 0.0;  // spectral norm of qfim - fim
    std::vector<std::size_t> singular_outcomes;
    bool direction_dependent = false;
};

FisherPair fisher_pair(const DerivativeBundle& bundle, const ProjectorSet& set, const LimitPolicy& policy = {},
                       const Tolerances& tol = {});
FisherPair fisher_pair(const ParametricState& model, std::span<const double> theta, const ProjectorSet& set,
                       const LimitPolicy& policy = {}, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Limit machinery shared with the saturation checks.

/// Direction (1,...,1)/sqrt(d).
std::vector<double> diagonal_direction(std::size_t d);

/// Bundles at theta +/- delta * direction for every policy step, evaluated
/// once and reused across outcomes.
class LimitPath {
public:
    LimitPath(const DerivativeBundle& at, std::span<const double> direction, const LimitPolicy& policy);

    // samples()[i] = {bundle at +steps[i], bundle at -steps[i]}
    const std::vector<std::pair<DerivativeBundle, DerivativeBundle>>& samples() const noexcept { return samples_; }

private:
    std::vector<std::pair<DerivativeBundle, DerivativeBundle>> samples_;
};

struct LimitEstimate {
    std::vector<double> value;
    double disagreement = 0.0;  // |R2 - R1| between the last two Richardson levels
};

/// Estimates lim_{delta->0} f along a LimitPath: symmetric averages
/// (f(+delta) + f(-delta))/2 extrapolated twice in delta^2. Throws
/// LimitNonConvergent when the last two levels disagree by more than
/// policy.convergence * max(1, |value|).
LimitEstimate richardson_limit(const LimitPath& path,
                               const std::function<std::vector<double>(const DerivativeBundle&)>& f,
                               const LimitPolicy& policy);

}  // namespace phasesat
