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

#include "phasesat/numeric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "phasesat/error.hpp"

namespace phasesat {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::SizeOverflow: return "SizeOverflow";
        case ErrorKind::ComplexGram: return "ComplexGram";
        case ErrorKind::BasisMismatch: return "BasisMismatch";
        case ErrorKind::IncompleteSet: return "IncompleteSet";
        case ErrorKind::LimitNonConvergent: return "LimitNonConvergent";
        case ErrorKind::LimitUnavailable: return "LimitUnavailable";
        case ErrorKind::StepTooLarge: return "StepTooLarge";
        case ErrorKind::WeakCommutativityViolated: return "WeakCommutativityViolated";
        case ErrorKind::MixInfeasible: return "MixInfeasible";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows*cols");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
    ComplexVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Complex acc = 0.0;
        const Complex* row = data_.data() + r * cols_;
        for (std::size_t c = 0; c < cols_; ++c) acc += row[c] * v[c];
        out[r] = acc;
    }
    return out;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
    if (c >= cols_) throw Error(ErrorKind::IndexOutOfRange, "column index");
    ComplexVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "shape mismatch");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "shape mismatch");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "shape mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (!m.square()) return false;
    return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.rows())) <= tol;
}

// ---------------------------------------------------------------------------
// RealSymMatrix

RealSymMatrix::RealSymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

RealSymMatrix::RealSymMatrix(std::size_t dim, std::vector<double> entries, double tol)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_) throw Error(ErrorKind::DimensionMismatch, "entry count does not match dim^2");
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r + 1; c < dim_; ++c) {
            double& a = data_[r * dim_ + c];
            double& b = data_[c * dim_ + r];
            if (std::abs(a - b) > tol) {
                throw Error(ErrorKind::NotHermitian, "matrix is not symmetric", std::abs(a - b));
            }
            const double mean = 0.5 * (a + b);
            a = mean;
            b = mean;
        }
    }
}

RealSymMatrix RealSymMatrix::identity(std::size_t dim) {
    RealSymMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.data_[i * dim + i] = 1.0;
    return m;
}

void RealSymMatrix::set(std::size_t r, std::size_t c, double v) {
    data_[r * dim_ + c] = v;
    data_[c * dim_ + r] = v;
}

double RealSymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i];
    return t;
}

double RealSymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

RealSymMatrix operator-(const RealSymMatrix& a, const RealSymMatrix& b) {
    if (a.dim_ != b.dim_) throw Error(ErrorKind::DimensionMismatch, "dimension mismatch");
    RealSymMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

RealSymMatrix operator+(const RealSymMatrix& a, const RealSymMatrix& b) {
    if (a.dim_ != b.dim_) throw Error(ErrorKind::DimensionMismatch, "dimension mismatch");
    RealSymMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

RealSymMatrix operator*(double s, const RealSymMatrix& a) {
    RealSymMatrix out = a;
    for (double& v : out.data_) v *= s;
    return out;
}

double max_abs_diff(const RealSymMatrix& a, const RealSymMatrix& b) { return (a - b).max_abs(); }

// ---------------------------------------------------------------------------
// Vectors

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "inner product size mismatch");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm(std::span<const Complex> v) {
    double acc = 0.0;
    for (const Complex& z : v) acc += std::norm(z);
    return std::sqrt(acc);
}

bool all_finite(std::span<const Complex> v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

// ---------------------------------------------------------------------------
// Eigenvalues

namespace {

// Closed form for Hermitian matrices of dimension <= 3. Entries are read
// through `at`, which must describe a Hermitian matrix.
template <typename At>
std::vector<double> small_hermitian_eigenvalues(std::size_t n, At at) {
    if (n == 0) return {};
    if (n == 1) return {at(0, 0).real()};
    if (n == 2) {
        const double a = at(0, 0).real();
        const double d = at(1, 1).real();
        const double half = 0.5 * (a - d);
        const double rad = std::hypot(half, std::abs(at(0, 1)));
        const double mid = 0.5 * (a + d);
        return {mid - rad, mid + rad};
    }
    const double a00 = at(0, 0).real(), a11 = at(1, 1).real(), a22 = at(2, 2).real();
    const Complex a01 = at(0, 1), a02 = at(0, 2), a12 = at(1, 2);
    const double p1 = std::norm(a01) + std::norm(a02) + std::norm(a12);
    if (p1 == 0.0) {
        std::vector<double> ev = {a00, a11, a22};
        std::sort(ev.begin(), ev.end());
        return ev;
    }
    const double q = (a00 + a11 + a22) / 3.0;
    const double b00 = a00 - q, b11 = a11 - q, b22 = a22 - q;
    const double p2 = b00 * b00 + b11 * b11 + b22 * b22 + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    // det(A - qI) for a Hermitian matrix is real.
    const double det = b00 * b11 * b22 + 2.0 * (a01 * a12 * std::conj(a02)).real() - b00 * std::norm(a12) -
                       b11 * std::norm(a02) - b22 * std::norm(a01);
    double r = det / (2.0 * p * p * p);
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e_max = q + 2.0 * p * std::cos(phi);
    const double e_min = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double e_mid = 3.0 * q - e_max - e_min;
    std::vector<double> ev = {e_min, e_mid, e_max};
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };
    double scale = 0.0;
    for (double v : a) scale += v * v;
    scale = std::max(1.0, std::sqrt(scale));
    constexpr double kTarget = 1e-12;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) off += at(r, c) * at(r, c);
        if (std::sqrt(2.0 * off) <= kTarget * scale) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const RealSymMatrix& m) {
    const std::size_t n = m.dim();
    if (n <= 3) return small_hermitian_eigenvalues(n, [&](std::size_t r, std::size_t c) { return Complex(m(r, c)); });
    return jacobi_eigenvalues(std::vector<double>(m.entries().begin(), m.entries().end()), n);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol) {
    if (!m.square()) throw Error(ErrorKind::NotSquare, "eigenvalues of a non-square matrix");
    const std::size_t n = m.rows();
    double asym = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) asym = std::max(asym, std::abs(m(r, c) - std::conj(m(c, r))));
    if (asym > hermitian_tol) throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian", asym);

    if (n <= 3) return small_hermitian_eigenvalues(n, [&](std::size_t r, std::size_t c) { return m(r, c); });

    // Real embedding [[Re, -Im], [Im, Re]] has every eigenvalue twice.
    const std::size_t n2 = 2 * n;
    std::vector<double> emb(n2 * n2);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const Complex h = 0.5 * (m(r, c) + std::conj(m(c, r)));
            emb[r * n2 + c] = h.real();
            emb[(r + n) * n2 + (c + n)] = h.real();
            emb[r * n2 + (c + n)] = -h.imag();
            emb[(r + n) * n2 + c] = h.imag();
        }
    }
    const std::vector<double> doubled = jacobi_eigenvalues(std::move(emb), n2);
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return ev;
}

double spectral_norm(const RealSymMatrix& m) {
    const std::vector<double> ev = hermitian_eigenvalues(m);
    if (ev.empty()) return 0.0;
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

// ---------------------------------------------------------------------------
// Permanent

Complex permanent(const ComplexMatrix& m) {
    if (!m.square()) throw Error(ErrorKind::NotSquare, "permanent of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1.0;
    if (n > 62) throw Error(ErrorKind::SizeOverflow, "permanent dimension too large");

    std::vector<Complex> row_sums(n, Complex{});
    Complex total = 0.0;
    std::uint64_t gray = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const auto col = static_cast<std::size_t>(std::countr_zero(k));
        const std::uint64_t bit = std::uint64_t{1} << col;
        gray ^= bit;
        const double sign_flip = (gray & bit) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i) row_sums[i] += sign_flip * m(i, col);
        Complex prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) prod *= row_sums[i];
        total += (std::popcount(gray) % 2 == 0) ? prod : -prod;
    }
    return (n % 2 == 0) ? total : -total;
}

// ---------------------------------------------------------------------------
// Real-coefficient Gram-Schmidt

RealSpan gram_schmidt_real_span(std::span<const ComplexVector> inputs, double tol) {
    const std::size_t count = inputs.size();
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const double im = std::abs(inner(inputs[i], inputs[j]).imag());
            if (im > tol) throw Error(ErrorKind::ComplexGram, "Gram matrix has a non-real entry", im);
        }
    }

    RealSpan span;
    span.coefficients.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        ComplexVector w = inputs[i];
        std::vector<double> coef(count, 0.0);
        coef[i] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < span.vectors.size(); ++k) {
                const double proj = inner(span.vectors[k], w).real();
                for (std::size_t a = 0; a < w.size(); ++a) w[a] -= proj * span.vectors[k][a];
                for (std::size_t m = 0; m < count; ++m) coef[m] -= proj * span.coefficients[m][k];
            }
        }
        const double nrm = norm(w);
        if (nrm < tol) continue;
        for (Complex& z : w) z /= nrm;
        for (double& c : coef) c /= nrm;
        span.vectors.push_back(std::move(w));
        for (std::size_t m = 0; m < count; ++m) span.coefficients[m].push_back(coef[m]);
    }
    return span;
}

}  // namespace phasesat
