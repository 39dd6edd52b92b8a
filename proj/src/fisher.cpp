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

#include "phasesat/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "phasesat/error.hpp"

namespace phasesat {

ProjectorSet::ProjectorSet(BasisPtr basis, std::vector<StateVector> projectors, std::vector<std::string> labels,
                           const Tolerances& tol)
    : basis_(std::move(basis)), projectors_(std::move(projectors)), labels_(std::move(labels)) {
    if (!basis_) throw Error(ErrorKind::InvalidArgument, "projector set without basis");
    if (labels_.empty()) {
        for (std::size_t k = 0; k < projectors_.size(); ++k) labels_.push_back("Y" + std::to_string(k + 1));
    }
    if (labels_.size() != projectors_.size()) throw Error(ErrorKind::DimensionMismatch, "label count");
    for (const StateVector& p : projectors_) {
        if (!p.basis().same_sector(*basis_)) throw Error(ErrorKind::BasisMismatch, "projector from another sector");
        const double n2 = p.norm() * p.norm();
        if (std::abs(n2 - 1.0) > tol.normalization) {
            throw Error(ErrorKind::InvalidArgument, "projector is not normalized", n2);
        }
    }

    const std::size_t dim = basis_->dim();
    ComplexMatrix sum(dim, dim);
    for (const StateVector& p : projectors_) {
        const auto a = p.amplitudes();
        for (std::size_t i = 0; i < dim; ++i) {
            if (a[i] == Complex{}) continue;
            for (std::size_t j = 0; j < dim; ++j) sum(i, j) += a[i] * std::conj(a[j]);
        }
    }
    completeness_error_ = max_abs_diff(sum, ComplexMatrix::identity(dim));
    complete_ = completeness_error_ <= tol.completeness;
}

ProjectorSet ProjectorSet::fock(BasisPtr basis) {
    std::vector<StateVector> projectors;
    std::vector<std::string> labels;
    for (const Occupation& occ : basis->states()) {
        projectors.push_back(StateVector::fock(basis, occ));
        labels.push_back(occ.label());
    }
    return ProjectorSet(std::move(basis), std::move(projectors), std::move(labels));
}

RealSymMatrix qfim(const DerivativeBundle& bundle) {
    const std::size_t d = bundle.parameters();
    std::vector<Complex> overlap(d);
    for (std::size_t l = 0; l < d; ++l) overlap[l] = inner(bundle.dpsi[l], bundle.psi);
    RealSymMatrix fq(d);
    for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t m = l; m < d; ++m) {
            const double v = 4.0 * inner(bundle.dpsi[l], bundle.dpsi[m]).real() + 4.0 * (overlap[l] * overlap[m]).real();
            fq.set(l, m, v);
        }
    }
    return fq;
}

std::vector<double> probabilities(const StateVector& psi_s, const ProjectorSet& set) {
    if (!psi_s.basis().same_sector(set.basis())) throw Error(ErrorKind::BasisMismatch, "state vs projector basis");
    std::vector<double> p(set.size());
    for (std::size_t k = 0; k < set.size(); ++k) p[k] = std::norm(inner(set[k], psi_s));
    return p;
}

// ---------------------------------------------------------------------------

std::vector<double> diagonal_direction(std::size_t d) {
    return std::vector<double>(d, d == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(d)));
}

LimitPath::LimitPath(const DerivativeBundle& at, std::span<const double> direction, const LimitPolicy& policy) {
    if (!at.source) {
        throw Error(ErrorKind::LimitUnavailable, "bundle has no parametric source to evaluate nearby points");
    }
    if (direction.size() != at.parameters()) throw Error(ErrorKind::DimensionMismatch, "limit direction arity");
    std::vector<double> plus(at.theta.size()), minus(at.theta.size());
    for (double step : policy.steps) {
        for (std::size_t j = 0; j < at.theta.size(); ++j) {
            plus[j] = at.theta[j] + step * direction[j];
            minus[j] = at.theta[j] - step * direction[j];
        }
        samples_.emplace_back(at.source->derivative_states(plus), at.source->derivative_states(minus));
    }
}

LimitEstimate richardson_limit(const LimitPath& path,
                               const std::function<std::vector<double>(const DerivativeBundle&)>& f,
                               const LimitPolicy& policy) {
    const auto& samples = path.samples();
    if (samples.size() != 3) throw Error(ErrorKind::InvalidArgument, "Richardson limit needs exactly three steps");
    std::vector<std::vector<double>> sym;
    for (const auto& [plus, minus] : samples) {
        std::vector<double> a = f(plus);
        const std::vector<double> b = f(minus);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = 0.5 * (a[i] + b[i]);
        sym.push_back(std::move(a));
    }
    // Steps halve, so the symmetric averages carry errors in delta^2: one
    // level removes delta^2 (factor 4), the next delta^4 (factor 16).
    const std::size_t n = sym[0].size();
    LimitEstimate est;
    est.value.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r1a = (4.0 * sym[1][i] - sym[0][i]) / 3.0;
        const double r1b = (4.0 * sym[2][i] - sym[1][i]) / 3.0;
        const double r2 = (16.0 * r1b - r1a) / 15.0;
        est.value[i] = r2;
        const double gap = std::abs(r2 - r1b);
        est.disagreement = std::max(est.disagreement, gap);
        if (!std::isfinite(r2) || gap > policy.convergence * std::max(1.0, std::abs(r2))) {
            throw Error(ErrorKind::LimitNonConvergent, "Richardson levels disagree", gap);
        }
    }
    return est;
}

namespace {

// 4 Re[a_l] Re[a_m] / |<Y|psi>|^2, a_l = <d_l psi|Y><Y|psi>, row-major d x d.
std::vector<double> singular_term(const DerivativeBundle& b, const StateVector& proj, double vanishing) {
    const std::size_t d = b.parameters();
    std::vector<double> out(d * d, 0.0);
    const Complex c = inner(proj, b.psi);
    if (std::abs(c) < vanishing) return out;
    std::vector<double> re(d);
    for (std::size_t l = 0; l < d; ++l) re[l] = (inner(b.dpsi[l], proj) * c).real();
    const double denom = std::norm(c);
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m) out[l * d + m] = 4.0 * re[l] * re[m] / denom;
    return out;
}

// Candidate limit directions in order of preference: the diagonal, then
// two fixed skew directions, then the coordinate axes.
std::vector<std::vector<double>> candidate_directions(std::size_t d) {
    std::vector<std::vector<double>> out;
    out.push_back(diagonal_direction(d));
    auto unit = [](std::vector<double> v) {
        double n = 0.0;
        for (double x : v) n += x * x;
        for (double& x : v) x /= std::sqrt(n);
        return v;
    };
    if (d > 1) {
        std::vector<double> rising(d), falling(d);
        for (std::size_t j = 0; j < d; ++j) {
            rising[j] = static_cast<double>(j + 1);
            falling[j] = static_cast<double>(d - j);
        }
        out.push_back(unit(rising));
        out.push_back(unit(falling));
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<double> axis(d, 0.0);
            axis[j] = 1.0;
            out.push_back(axis);
        }
    }
    return out;
}

// |sum_j <Y|d_j psi> u_j| relative to max_j |<Y|d_j psi>|.
double first_order_along(std::span<const Complex> overlaps, std::span<const double> u) {
    Complex b = 0.0;
    double scale = 0.0;
    for (std::size_t j = 0; j < overlaps.size(); ++j) {
        b += overlaps[j] * u[j];
        scale = std::max(scale, std::abs(overlaps[j]));
    }
    return scale == 0.0 ? 0.0 : std::abs(b) / scale;
}

}  // namespace

FimResult fim(const DerivativeBundle& bundle, const ProjectorSet& set, const LimitPolicy& policy,
              const Tolerances& tol) {
    if (!bundle.basis().same_sector(set.basis())) throw Error(ErrorKind::BasisMismatch, "bundle vs projector basis");
    if (!set.complete()) {
        throw Error(ErrorKind::IncompleteSet, "projector set is not complete", set.completeness_error());
    }
    const std::size_t d = bundle.parameters();
    std::vector<double> acc(d * d, 0.0);
    FimResult result;

    const std::vector<std::vector<double>> directions = candidate_directions(d);
    std::vector<std::optional<LimitPath>> paths(directions.size());
    auto path_for = [&](std::size_t i) -> const LimitPath& {
        if (!paths[i]) paths[i].emplace(bundle, directions[i], policy);
        return *paths[i];
    };

    for (std::size_t k = 0; k < set.size(); ++k) {
        const StateVector& proj = set[k];
        const Complex c = inner(proj, bundle.psi);
        const double p = std::norm(c);
        std::vector<Complex> dover(d);  // <d_l psi|Y>
        for (std::size_t l = 0; l < d; ++l) dover[l] = inner(bundle.dpsi[l], proj);

        if (p >= policy.p_floor) {
            std::vector<double> dp(d);
            for (std::size_t l = 0; l < d; ++l) dp[l] = 2.0 * (dover[l] * c).real();
            for (std::size_t l = 0; l < d; ++l)
                for (std::size_t m = 0; m < d; ++m) acc[l * d + m] += dp[l] * dp[m] / p;
            continue;
        }

        const bool first_order_zero = std::all_of(
            dover.begin(), dover.end(), [&](const Complex& z) { return std::abs(z) < tol.first_order_zero; });
        if (first_order_zero) continue;

        result.singular_outcomes.push_back(k);
        std::vector<Complex> ket_over(d);  // <Y|d_j psi>
        for (std::size_t j = 0; j < d; ++j) ket_over[j] = std::conj(dover[j]);

        // A direction along which the first-order overlap cancels keeps the
        // outcome unpopulated to higher order (P can vanish on a whole line);
        // such a path does not probe the outcome, so take the next candidate.
        std::size_t chosen = 0;
        for (std::size_t i = 0; i < directions.size(); ++i) {
            if (first_order_along(ket_over, directions[i]) >= policy.degenerate_direction) {
                chosen = i;
                break;
            }
        }

        auto term = [&](const DerivativeBundle& b) { return singular_term(b, proj, policy.vanishing_overlap); };
        const LimitEstimate est = richardson_limit(path_for(chosen), term, policy);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += est.value[i];

        if (policy.audit_directions) {
            for (std::size_t i = 0; i < directions.size(); ++i) {
                if (i == chosen || first_order_along(ket_over, directions[i]) < policy.degenerate_direction) continue;
                try {
                    const LimitEstimate alt = richardson_limit(path_for(i), term, policy);
                    for (std::size_t e = 0; e < acc.size(); ++e) {
                        if (std::abs(alt.value[e] - est.value[e]) > policy.direction_spread) {
                            result.direction_dependent = true;
                        }
                    }
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::LimitNonConvergent) throw;
                    result.direction_dependent = true;
                }
            }
        }
    }

    result.fim = RealSymMatrix(d, std::move(acc), 1e-9);
    return result;
}

RealSymMatrix fim_finite_difference(const ParametricState& model, std::span<const double> theta,
                                    const ProjectorSet& set, double delta) {
    if (delta <= 0.0) throw Error(ErrorKind::InvalidArgument, "finite-difference step must be positive");
    const std::size_t d = model.parameter_count();
    if (theta.size() != d) throw Error(ErrorKind::DimensionMismatch, "theta arity");
    const std::vector<double> p0 = probabilities(model.output_state(theta), set);
    const double p_min = *std::min_element(p0.begin(), p0.end());
    if (p_min <= 10.0 * delta) {
        throw Error(ErrorKind::StepTooLarge, "smallest outcome probability is not resolved by the step", p_min);
    }

    std::vector<std::vector<double>> dp(d);
    std::vector<double> shifted(theta.begin(), theta.end());
    for (std::size_t l = 0; l < d; ++l) {
        shifted[l] = theta[l] + delta;
        const std::vector<double> up = probabilities(model.output_state(shifted), set);
        shifted[l] = theta[l] - delta;
        const std::vector<double> down = probabilities(model.output_state(shifted), set);
        shifted[l] = theta[l];
        dp[l].resize(set.size());
        for (std::size_t k = 0; k < set.size(); ++k) dp[l][k] = (up[k] - down[k]) / (2.0 * delta);
    }
    RealSymMatrix f(d);
    for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t m = l; m < d; ++m) {
            double v = 0.0;
            for (std::size_t k = 0; k < set.size(); ++k) v += dp[l][k] * dp[m][k] / p0[k];
            f.set(l, m, v);
        }
    }
    return f;
}

FisherPair fisher_pair(const DerivativeBundle& bundle, const ProjectorSet& set, const LimitPolicy& policy,
                       const Tolerances& tol) {
    FimResult fr = fim(bundle, set, policy, tol);
    FisherPair pair;
    pair.theta = bundle.theta;
    pair.qfim = qfim(bundle);
    pair.fim = std::move(fr.fim);
    pair.gap = spectral_norm(pair.qfim - pair.fim);
    pair.singular_outcomes = std::move(fr.singular_outcomes);
    pair.direction_dependent = fr.direction_dependent;
    return pair;
}

FisherPair fisher_pair(const ParametricState& model, std::span<const double> theta, const ProjectorSet& set,
                       const LimitPolicy& policy, const Tolerances& tol) {
    return fisher_pair(model.derivative_states(theta), set, policy, tol);
}

}  // namespace phasesat
