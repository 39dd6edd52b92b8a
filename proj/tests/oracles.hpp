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

// Reference implementations used only by the tests. They share no code with
// the library beyond the basic containers.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "phasesat/fock.hpp"
#include "phasesat/interferometer.hpp"
#include "phasesat/numeric.hpp"

namespace oracle {

using phasesat::Complex;
using phasesat::ComplexMatrix;
using phasesat::ComplexVector;

// sum over permutations of prod_i a(i, sigma(i))
inline Complex naive_permanent(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total = 0.0;
    do {
        Complex term = 1.0;
        for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0 ? Complex(1.0) : total;
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Complex(g(rng), g(rng));
    return m;
}

// Transforms the Fock state |S> under a_j^dagger -> sum_i U_ij a_i^dagger by
// expanding the creation-operator polynomial monomial by monomial.
inline std::map<std::vector<int>, Complex> transform_fock(const ComplexMatrix& u, const std::vector<int>& s) {
    const std::size_t m = s.size();
    // Polynomial in creation operators: exponent vector -> coefficient.
    std::map<std::vector<int>, Complex> poly{{std::vector<int>(m, 0), Complex(1.0)}};
    double norm_in = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
        for (int rep = 0; rep < s[j]; ++rep) {
            std::map<std::vector<int>, Complex> next;
            for (const auto& [expo, coef] : poly) {
                for (std::size_t i = 0; i < m; ++i) {
                    std::vector<int> e = expo;
                    ++e[i];
                    next[e] += coef * u(i, j);
                }
            }
            poly = std::move(next);
        }
        norm_in *= std::tgamma(s[j] + 1.0);
    }
    // a^dagger^n |0> = sqrt(n!) |n>
    std::map<std::vector<int>, Complex> out;
    for (const auto& [expo, coef] : poly) {
        double f = 1.0;
        for (int n : expo) f *= std::tgamma(n + 1.0);
        out[expo] = coef * std::sqrt(f / norm_in);
    }
    return out;
}

inline ComplexMatrix lift(const ComplexMatrix& u, const phasesat::FockBasis& basis) {
    const std::size_t n = basis.dim();
    ComplexMatrix out(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const auto image = transform_fock(u, basis.state(c).counts());
        for (std::size_t r = 0; r < n; ++r) {
            const auto it = image.find(basis.state(r).counts());
            if (it != image.end()) out(r, c) = it->second;
        }
    }
    return out;
}

// Output state of V diag(e^{i theta n}) W |probe> built from the expansion oracle.
inline ComplexVector model_state(const phasesat::InterferometerModel& model, const std::vector<double>& theta) {
    const phasesat::FockBasis& basis = *model.basis();
    const std::size_t m = model.modes();
    ComplexMatrix phases = ComplexMatrix::identity(m);
    for (std::size_t l = 0; l < theta.size(); ++l) phases(model.phase_modes()[l], model.phase_modes()[l]) *= std::polar(1.0, theta[l]);
    const ComplexMatrix total = model.recombiner() * phases * model.splitter();
    const auto image = transform_fock(total, model.probe().counts());
    ComplexVector out(basis.dim());
    for (std::size_t r = 0; r < basis.dim(); ++r) {
        const auto it = image.find(basis.state(r).counts());
        if (it != image.end()) out[r] = it->second;
    }
    return out;
}

// Central-difference derivative of the oracle state.
inline ComplexVector model_derivative(const phasesat::InterferometerModel& model, std::vector<double> theta,
                                      std::size_t l, double h) {
    theta[l] += h;
    const ComplexVector plus = model_state(model, theta);
    theta[l] -= 2 * h;
    const ComplexVector minus = model_state(model, theta);
    ComplexVector d(plus.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = (plus[i] - minus[i]) / (2 * h);
    return d;
}

}  // namespace oracle
