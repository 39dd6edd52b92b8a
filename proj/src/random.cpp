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

#include "phasesat/random.hpp"

#include <cmath>

#include "phasesat/error.hpp"

namespace phasesat {

namespace {

// Orthonormalizes `v` against `accepted` (two passes); returns its residual norm.
double orthogonalize(ComplexVector& v, const std::vector<ComplexVector>& accepted) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const ComplexVector& a : accepted) {
            const Complex c = inner(a, v);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * a[i];
        }
    }
    const double n = norm(v);
    if (n > 0.0)
        for (Complex& z : v) z /= n;
    return n;
}

}  // namespace

ComplexVector random_unit_vector(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    for (;;) {
        ComplexVector v(n);
        for (Complex& z : v) z = Complex(g(rng), g(rng));
        const double nv = norm(v);
        if (nv < 1e-6) continue;
        for (Complex& z : v) z /= nv;
        return v;
    }
}

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
    std::vector<ComplexVector> cols;
    while (cols.size() < n) {
        ComplexVector v = random_unit_vector(n, rng);
        if (orthogonalize(v, cols) > 1e-6) cols.push_back(std::move(v));
    }
    // Gram-Schmidt on Gaussian columns is QR with a positive R diagonal,
    // which is exactly the Haar measure.
    ComplexMatrix u(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) u(r, c) = cols[c][r];
    return u;
}

ProjectorSet rotated_basis_set(BasisPtr basis, const ComplexMatrix& basis_change) {
    if (basis_change.rows() != basis->dim() || !basis_change.square()) {
        throw Error(ErrorKind::DimensionMismatch, "basis change has the wrong size");
    }
    std::vector<StateVector> projectors;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < basis->dim(); ++k) {
        projectors.push_back(StateVector::normalized(basis, basis_change.column(k), 1e-9));
        labels.push_back("r" + std::to_string(k));
    }
    return ProjectorSet(std::move(basis), std::move(projectors), std::move(labels));
}

ProjectorSet probe_orthogonal_set(const StateVector& psi, std::mt19937_64& rng) {
    const BasisPtr& basis = psi.basis_ptr();
    const std::size_t n = basis->dim();
    std::vector<ComplexVector> accepted{ComplexVector(psi.amplitudes().begin(), psi.amplitudes().end())};
    while (accepted.size() < n) {
        ComplexVector v = random_unit_vector(n, rng);
        if (orthogonalize(v, accepted) > 1e-6) accepted.push_back(std::move(v));
    }
    std::vector<StateVector> projectors;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) {
        projectors.push_back(StateVector::normalized(basis, accepted[k], 1e-9));
        labels.push_back(k == 0 ? "psi" : "o" + std::to_string(k));
    }
    return ProjectorSet(basis, std::move(projectors), std::move(labels));
}

}  // namespace phasesat
