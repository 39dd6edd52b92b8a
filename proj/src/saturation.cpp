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

#include "phasesat/saturation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "phasesat/error.hpp"

namespace phasesat {

std::string to_string(ProjectorClass c) {
    switch (c) {
        case ProjectorClass::Orthogonal: return "h";
        case ProjectorClass::NonOrthogonal: return "q";
        case ProjectorClass::Probe: return "probe";
    }
    return "?";
}

std::string to_string(ConditionId c) {
    switch (c) {
        case ConditionId::T1: return "T1";
        case ConditionId::T2: return "T2";
        case ConditionId::WC: return "WC";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Saturates: return "Saturates";
        case Verdict::DoesNotSaturate: return "DoesNotSaturate";
        case Verdict::IndeterminateFirstOrder: return "IndeterminateFirstOrder";
    }
    return "?";
}

Classification classify_projectors(const StateVector& psi_s, const ProjectorSet& set, double eps_orth) {
    if (!psi_s.basis().same_sector(set.basis())) throw Error(ErrorKind::BasisMismatch, "state vs projector basis");
    Classification out;
    out.tags.reserve(set.size());
    for (std::size_t k = 0; k < set.size(); ++k) {
        ProjectorTag tag;
        tag.index = k;
        tag.label = k < set.labels().size() ? set.labels()[k] : std::to_string(k);
        tag.overlap = std::abs(inner(set[k], psi_s));
        if (tag.overlap < eps_orth) {
            tag.kind = ProjectorClass::Orthogonal;
            out.h.push_back(k);
        } else if (tag.overlap > 1.0 - eps_orth) {
            tag.kind = ProjectorClass::Probe;
            out.probe.push_back(k);
        } else {
            tag.kind = ProjectorClass::NonOrthogonal;
            out.q.push_back(k);
        }
        out.tags.push_back(std::move(tag));
    }
    return out;
}

double weak_commutativity_residual(const DerivativeBundle& bundle) {
    double worst = 0.0;
    const std::size_t d = bundle.parameters();
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = l + 1; m < d; ++m)
            worst = std::max(worst, std::abs(inner(bundle.dpsi[l], bundle.dpsi[m]).imag()));
    return worst;
}

std::vector<ConditionResidual> theorem1_residuals(const DerivativeBundle& bundle, const ProjectorSet& set,
                                                  std::span<const std::size_t> orthogonal,
                                                  const LimitPolicy& policy, const Tolerances& tol) {
    const std::size_t d = bundle.parameters();
    std::vector<ConditionResidual> out;
    std::optional<LimitPath> path;
    for (std::size_t k : orthogonal) {
        const StateVector& proj = set[k];
        std::vector<Complex> dover(d);  // <d_l psi|Y>
        bool first_order_zero = true;
        for (std::size_t l = 0; l < d; ++l) {
            dover[l] = inner(bundle.dpsi[l], proj);
            if (std::abs(dover[l]) >= tol.first_order_zero) first_order_zero = false;
        }

        ConditionResidual r;
        r.projector = k;
        r.condition = ConditionId::T1;
        if (!first_order_zero) {
            for (std::size_t l = 0; l < d; ++l) {
                for (std::size_t m = l; m < d; ++m) {
                    // conj(<d_m psi|Y>) = <Y|d_m psi>
                    const double v = (dover[l] * std::conj(dover[m])).imag();
                    if (std::abs(v) > r.residual || (l == 0 && m == 0)) {
                        r.residual = std::abs(v);
                        r.signed_value = v;
                        r.l = l;
                        r.m = m;
                    }
                }
            }
            out.push_back(r);
            continue;
        }

        r.indeterminate_first_order = true;
        auto ratio = [&](const DerivativeBundle& b) {
            std::vector<double> v(d, 0.0);
            const Complex c = inner(proj, b.psi);
            if (std::abs(c) < policy.vanishing_overlap) return v;
            for (std::size_t l = 0; l < d; ++l) v[l] = (inner(b.dpsi[l], proj) * c).imag() / std::abs(c);
            return v;
        };
        try {
            if (!path) path.emplace(bundle, diagonal_direction(d), policy);
            const LimitEstimate est = richardson_limit(*path, ratio, policy);
            for (std::size_t l = 0; l < d; ++l) {
                if (std::abs(est.value[l]) > r.residual || l == 0) {
                    r.residual = std::abs(est.value[l]);
                    r.signed_value = est.value[l];
                    r.l = r.m = l;
                }
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::LimitNonConvergent && e.kind() != ErrorKind::LimitUnavailable) throw;
            r.unresolved = true;
        }
        out.push_back(r);
    }
    return out;
}

std::vector<ConditionResidual> theorem2_residuals(const DerivativeBundle& bundle, const ProjectorSet& set,
                                                  std::span<const std::size_t> non_orthogonal) {
    const std::size_t d = bundle.parameters();
    std::vector<Complex> dpsi_psi(d);
    for (std::size_t l = 0; l < d; ++l) dpsi_psi[l] = inner(bundle.dpsi[l], bundle.psi);

    std::vector<ConditionResidual> out;
    for (std::size_t k : non_orthogonal) {
        const StateVector& proj = set[k];
        const Complex c = inner(proj, bundle.psi);
        ConditionResidual r;
        r.projector = k;
        r.condition = ConditionId::T2;
        for (std::size_t l = 0; l < d; ++l) {
            const double v = (inner(bundle.dpsi[l], proj) * c).imag() - std::norm(c) * dpsi_psi[l].imag();
            if (std::abs(v) > r.residual || l == 0) {
                r.residual = std::abs(v);
                r.signed_value = v;
                r.l = r.m = l;
            }
        }
        out.push_back(r);
    }
    return out;
}

void SaturationReport::check_consistency(double gap_tol) const {
    if (verdict == Verdict::IndeterminateFirstOrder) return;
    const bool saturates = verdict == Verdict::Saturates;
    if (saturates != (gap < gap_tol)) {
        std::ostringstream msg;
        msg << "verdict " << to_string(verdict) << " disagrees with gap " << gap;
        throw Error(ErrorKind::InternalInconsistency, msg.str(), gap);
    }
}

SaturationReport check_saturation(const DerivativeBundle& bundle, const ProjectorSet& set,
                                  const LimitPolicy& policy, const Tolerances& tol) {
    if (!set.complete()) {
        throw Error(ErrorKind::IncompleteSet, "projector set is not complete", set.completeness_error());
    }
    const Classification cls = classify_projectors(bundle.psi, set, tol.eps_orth);

    SaturationReport report;
    report.theta = bundle.theta;
    report.classification = cls.tags;
    report.weak_comm_residual = weak_commutativity_residual(bundle);
    report.t1 = theorem1_residuals(bundle, set, cls.h, policy, tol);
    // The probe projector satisfies the non-orthogonal condition identically;
    // it is listed so the table covers every projector with nonzero overlap.
    std::vector<std::size_t> q = cls.q;
    q.insert(q.end(), cls.probe.begin(), cls.probe.end());
    std::sort(q.begin(), q.end());
    report.t2 = theorem2_residuals(bundle, set, q);

    bool holds = report.weak_comm_residual < tol.saturation;
    bool unresolved = false;
    for (const ConditionResidual& r : report.t1) {
        if (r.unresolved) unresolved = true;
        else if (r.residual >= tol.saturation) holds = false;
    }
    for (const ConditionResidual& r : report.t2) {
        if (r.residual >= tol.saturation) holds = false;
    }
    if (!holds) report.verdict = Verdict::DoesNotSaturate;
    else if (unresolved) report.verdict = Verdict::IndeterminateFirstOrder;
    else report.verdict = Verdict::Saturates;

    report.gap = fisher_pair(bundle, set, policy, tol).gap;
    report.check_consistency(tol.gap);
    return report;
}

SaturationReport check_saturation(const ParametricState& model, std::span<const double> theta,
                                  const ProjectorSet& set, const LimitPolicy& policy, const Tolerances& tol) {
    return check_saturation(model.derivative_states(theta), set, policy, tol);
}

}  // namespace phasesat
