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

#include "phasesat/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phasesat/error.hpp"

namespace phasesat {

double OmegaFrame::max_imag_gram() const {
    double worst = 0.0;
    for (std::size_t l = 0; l < gram.rows(); ++l)
        for (std::size_t m = 0; m < gram.cols(); ++m) worst = std::max(worst, std::abs(gram(l, m).imag()));
    return worst;
}

OmegaFrame omega_frame(const DerivativeBundle& bundle) {
    OmegaFrame frame;
    frame.bundle = bundle;
    const std::size_t d = bundle.parameters();
    const auto psi = bundle.psi.amplitudes();
    for (std::size_t m = 0; m < d; ++m) {
        const Complex s = inner(bundle.dpsi[m], bundle.psi);
        ComplexVector w(bundle.dpsi[m].amplitudes().begin(), bundle.dpsi[m].amplitudes().end());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += psi[i] * s;
        frame.omegas.emplace_back(bundle.psi.basis_ptr(), std::move(w));
    }
    frame.gram = ComplexMatrix(d, d);
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m) frame.gram(l, m) = inner(frame.omegas[l], frame.omegas[m]);
    return frame;
}

namespace {

constexpr double kCompletionAccept = 1e-8;
constexpr double kVerifyGap = 1e-8;

void require_weak_commutativity(const OmegaFrame& frame, const Tolerances& tol) {
    const double im = frame.max_imag_gram();
    if (im >= tol.weak_commutativity) {
        throw Error(ErrorKind::WeakCommutativityViolated,
                    "Im(Omega) is nonzero; no projective measurement saturates", im);
    }
}

RealSpan omega_span(const OmegaFrame& frame, const Tolerances& tol) {
    std::vector<ComplexVector> inputs;
    for (const StateVector& w : frame.omegas) inputs.emplace_back(w.amplitudes().begin(), w.amplitudes().end());
    return gram_schmidt_real_span(inputs, tol.gram_drop);
}

// Orthonormal completion of `vectors` from canonical basis vectors, in basis order.
std::vector<ComplexVector> complete_basis(const std::vector<ComplexVector>& vectors, std::size_t dim) {
    std::vector<ComplexVector> accepted = vectors;
    std::vector<ComplexVector> added;
    for (std::size_t i = 0; i < dim && accepted.size() < dim; ++i) {
        ComplexVector v(dim, 0.0);
        v[i] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const ComplexVector& a : accepted) {
                const Complex c = inner(a, v);
                for (std::size_t j = 0; j < dim; ++j) v[j] -= c * a[j];
            }
        }
        const double n = norm(v);
        if (n <= kCompletionAccept) continue;
        for (Complex& z : v) z /= n;
        accepted.push_back(v);
        added.push_back(std::move(v));
    }
    if (accepted.size() != dim) throw Error(ErrorKind::InternalInconsistency, "completion did not reach full rank");
    return added;
}

OptimalMeasurement assemble(const OmegaFrame& frame, std::vector<ComplexVector> in_span,
                            std::vector<std::string> labels, std::vector<std::vector<double>> coefficients,
                            const LimitPolicy& policy, const Tolerances& tol) {
    const BasisPtr& basis = frame.psi_s().basis_ptr();
    const std::vector<ComplexVector> extra = complete_basis(in_span, basis->dim());

    OptimalMeasurement out;
    out.in_span = in_span.size();
    out.coefficients = std::move(coefficients);
    std::vector<StateVector> projectors;
    for (ComplexVector& v : in_span) projectors.push_back(StateVector::normalized(basis, std::move(v), 1e-9));
    for (std::size_t i = 0; i < extra.size(); ++i) {
        projectors.push_back(StateVector::normalized(basis, extra[i], 1e-9));
        labels.push_back("c" + std::to_string(i + 1));
    }
    out.set = ProjectorSet(basis, std::move(projectors), std::move(labels), tol);
    if (!out.set.complete()) {
        throw Error(ErrorKind::InternalInconsistency, "constructed set is not complete", out.set.completeness_error());
    }

    out.gap = fisher_pair(frame.bundle, out.set, policy, tol).gap;
    if (!(out.gap < kVerifyGap)) {
        throw Error(ErrorKind::InternalInconsistency, "constructed set does not saturate F = F_Q", out.gap);
    }
    return out;
}

}  // namespace

OptimalMeasurement construct_orthogonal_optimal(const OmegaFrame& frame, const LimitPolicy& policy,
                                                const Tolerances& tol) {
    require_weak_commutativity(frame, tol);
    const std::size_t d = frame.omegas.size();
    const RealSpan span = omega_span(frame, tol);

    std::vector<ComplexVector> in_span;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> coefficients;

    const auto psi = frame.psi_s().amplitudes();
    in_span.emplace_back(psi.begin(), psi.end());
    labels.push_back("psi");
    std::vector<double> probe_row(d + 1, 0.0);
    probe_row[d] = 1.0;
    coefficients.push_back(std::move(probe_row));

    for (std::size_t k = 0; k < span.vectors.size(); ++k) {
        in_span.push_back(span.vectors[k]);
        labels.push_back("w" + std::to_string(k + 1));
        std::vector<double> row(d + 1, 0.0);
        for (std::size_t m = 0; m < d; ++m) row[m] = span.coefficients[m][k];
        coefficients.push_back(std::move(row));
    }
    return assemble(frame, std::move(in_span), std::move(labels), std::move(coefficients), policy, tol);
}

OptimalMeasurement construct_nonorthogonal_optimal(const OmegaFrame& frame, double mix, const LimitPolicy& policy,
                                                   const Tolerances& tol) {
    if (!(mix > 0.0 && mix < 1.0)) throw Error(ErrorKind::MixInfeasible, "mix must lie in (0, 1)", mix);
    require_weak_commutativity(frame, tol);
    const std::size_t d = frame.omegas.size();
    const RealSpan span = omega_span(frame, tol);
    const std::size_t r = span.vectors.size();
    const std::size_t n = r + 1;

    // Householder reflection H = I - 2 v v^T / v^T v with H e_0 = t, where
    // t_0 = sqrt(1 - r mix^2/(r+1)) and t_j = mix/sqrt(r+1). H is symmetric,
    // so the probe component of H e_k is t_k.
    std::vector<double> t(n, mix / std::sqrt(static_cast<double>(n)));
    t[0] = std::sqrt(1.0 - static_cast<double>(r) * mix * mix / static_cast<double>(n));
    std::vector<double> h(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) h[i * n + i] = 1.0;
    if (r > 0) {
        std::vector<double> v(t.size());
        double vv = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = (i == 0 ? 1.0 : 0.0) - t[i];
            vv += v[i] * v[i];
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h[i * n + j] -= 2.0 * v[i] * v[j] / vv;
    }

    const double floor = mix / std::sqrt(static_cast<double>(d + 1)) * (1.0 - 1e-12);
    const auto psi = frame.psi_s().amplitudes();
    const std::size_t dim = psi.size();
    std::vector<ComplexVector> in_span;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> coefficients;
    for (std::size_t k = 0; k < n; ++k) {
        if (r > 0 && std::abs(h[k]) < floor) {
            throw Error(ErrorKind::MixInfeasible, "reflection leaves a projector below the overlap floor", h[k]);
        }
        ComplexVector u(dim);
        for (std::size_t i = 0; i < dim; ++i) u[i] = h[k] * psi[i];
        for (std::size_t j = 1; j < n; ++j) {
            const double c = h[j * n + k];
            for (std::size_t i = 0; i < dim; ++i) u[i] += c * span.vectors[j - 1][i];
        }
        std::vector<double> row(d + 1, 0.0);
        row[d] = h[k];
        for (std::size_t m = 0; m < d; ++m)
            for (std::size_t j = 1; j < n; ++j) row[m] += span.coefficients[m][j - 1] * h[j * n + k];
        in_span.push_back(std::move(u));
        labels.push_back("u" + std::to_string(k));
        coefficients.push_back(std::move(row));
    }
    return assemble(frame, std::move(in_span), std::move(labels), std::move(coefficients), policy, tol);
}

}  // namespace phasesat
