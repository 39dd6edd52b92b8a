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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "phasesat/tolerances.hpp"

namespace phasesat {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;

    ComplexVector apply(std::span<const Complex> v) const;
    ComplexVector column(std::size_t c) const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// max_ij |a_ij - b_ij|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |(M^dagger M - I)_ij| <= tol
bool is_unitary(const ComplexMatrix& m, double tol = 1e-12);

/// Real symmetric matrix, stored densely.
class RealSymMatrix {
public:
    RealSymMatrix() = default;
    explicit RealSymMatrix(std::size_t dim);
    /// Throws NotHermitian when asymmetric beyond `tol`; the stored matrix is
    /// symmetrized.
    RealSymMatrix(std::size_t dim, std::vector<double> entries, double tol = 1e-12);

    static RealSymMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    /// Sets both (r,c) and (c,r).
    void set(std::size_t r, std::size_t c, double v);
    std::span<const double> entries() const noexcept { return data_; }

    double trace() const;
    double max_abs() const;

    friend RealSymMatrix operator-(const RealSymMatrix& a, const RealSymMatrix& b);
    friend RealSymMatrix operator+(const RealSymMatrix& a, const RealSymMatrix& b);
    friend RealSymMatrix operator*(double s, const RealSymMatrix& a);

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

double max_abs_diff(const RealSymMatrix& a, const RealSymMatrix& b);

// Vector helpers. inner(a, b) = <a|b> = sum conj(a_i) b_i.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);
bool all_finite(std::span<const Complex> v);

/// Ascending eigenvalues. Dimensions up to 3 use the closed-form
/// characteristic polynomial, larger ones cyclic Jacobi rotations.
std::vector<double> hermitian_eigenvalues(const RealSymMatrix& m);
/// Throws NotHermitian if |M - M^dagger| exceeds `hermitian_tol`.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol = 1e-10);

/// Largest-magnitude eigenvalue of a symmetric matrix.
double spectral_norm(const RealSymMatrix& m);

/// Ryser's formula with Gray-code subset iteration, O(2^n n).
Complex permanent(const ComplexMatrix& m);

struct RealSpan {
    std::vector<ComplexVector> vectors;  // orthonormal
    // coefficients[m][k]: output k = sum_m coefficients[m][k] * input m
    std::vector<std::vector<double>> coefficients;
};

/// Orthonormalizes `inputs` using only real combination coefficients.
/// Requires every pairwise inner product to be real within `tol`, throws
/// ComplexGram otherwise. Inputs whose residual norm after projection falls
/// below `tol` are dropped.
RealSpan gram_schmidt_real_span(std::span<const ComplexVector> inputs, double tol = 1e-10);

}  // namespace phasesat
