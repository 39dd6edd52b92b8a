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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "phasesat/error.hpp"
#include "phasesat/numeric.hpp"
#include "phasesat/random.hpp"

using namespace phasesat;

namespace {

RealSymMatrix random_sym(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    RealSymMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) m.set(r, c, g(rng));
    return m;
}

// Q^T A Q for a random orthogonal Q (Householder product).
RealSymMatrix rotate(const RealSymMatrix& a, std::mt19937_64& rng) {
    const std::size_t n = a.dim();
    std::normal_distribution<double> g;
    std::vector<double> v(n);
    double vv = 0.0;
    for (double& x : v) {
        x = g(rng);
        vv += x * x;
    }
    std::vector<double> q(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i * n + j] = (i == j ? 1.0 : 0.0) - 2.0 * v[i] * v[j] / vv;
    std::vector<double> out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) out[i * n + j] += q[k * n + i] * a(k, l) * q[l * n + j];
    return RealSymMatrix(n, out, 1e-9);
}

}  // namespace

TEST(Permanent, MatchesPermutationSum) {
    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int t = 0; t < 10; ++t) {
            const ComplexMatrix a = oracle::random_matrix(n, n, rng);
            const Complex want = oracle::naive_permanent(a);
            EXPECT_LE(std::abs(permanent(a) - want), 1e-11 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST(Permanent, EmptyIsOneAndNonSquareThrows) {
    EXPECT_EQ(permanent(ComplexMatrix(0, 0)), Complex(1.0));
    try {
        permanent(ComplexMatrix(2, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSquare);
    }
}

TEST(Permanent, AllOnesIsFactorial) {
    std::vector<Complex> ones(25, 1.0);
    EXPECT_NEAR(permanent(ComplexMatrix(5, 5, ones)).real(), 120.0, 1e-9);
}

TEST(Eigenvalues, ClosedFormSmallCases) {
    auto e2 = hermitian_eigenvalues(RealSymMatrix(2, {16.0 / 3, -8.0 / 3, -8.0 / 3, 16.0 / 3}));
    EXPECT_NEAR(e2[0], 8.0 / 3, 1e-12);
    EXPECT_NEAR(e2[1], 8.0, 1e-12);
    auto e3 = hermitian_eigenvalues(RealSymMatrix(3, {2, 1, 0, 1, 2, 1, 0, 1, 2}));
    EXPECT_NEAR(e3[0], 2 - std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(e3[1], 2.0, 1e-12);
    EXPECT_NEAR(e3[2], 2 + std::sqrt(2.0), 1e-12);
    auto e1 = hermitian_eigenvalues(RealSymMatrix(1, {-3.5}));
    EXPECT_DOUBLE_EQ(e1[0], -3.5);
}

TEST(Eigenvalues, RepeatedRootsIn3x3) {
    auto e = hermitian_eigenvalues(RealSymMatrix::identity(3));
    for (double v : e) EXPECT_NEAR(v, 1.0, 1e-12);
    auto f = hermitian_eigenvalues(RealSymMatrix(3, {1, 1, 1, 1, 1, 1, 1, 1, 1}));
    EXPECT_NEAR(f[0], 0.0, 1e-12);
    EXPECT_NEAR(f[1], 0.0, 1e-12);
    EXPECT_NEAR(f[2], 3.0, 1e-12);
}

TEST(Eigenvalues, SimilarityInvariantAndTraceConsistent) {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 7; ++n) {
        for (int t = 0; t < 5; ++t) {
            const RealSymMatrix a = random_sym(n, rng);
            const auto ea = hermitian_eigenvalues(a);
            const auto eb = hermitian_eigenvalues(rotate(a, rng));
            ASSERT_EQ(ea.size(), n);
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                EXPECT_NEAR(ea[i], eb[i], 1e-9);
                if (i) EXPECT_LE(ea[i - 1], ea[i]);
                sum += ea[i];
            }
            EXPECT_NEAR(sum, a.trace(), 1e-9);
        }
    }
}

TEST(Eigenvalues, ComplexHermitianMatchesUnitaryConjugation) {
    std::mt19937_64 rng(5);
    for (std::size_t n : {2u, 3u, 5u}) {
        const ComplexMatrix u = random_unitary(n, rng);
        std::vector<Complex> diag;
        for (std::size_t i = 0; i < n; ++i) diag.emplace_back(static_cast<double>(i) - 1.5);
        const ComplexMatrix h = u * ComplexMatrix::diagonal(diag) * u.adjoint();
        const auto e = hermitian_eigenvalues(h);
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(e[i], diag[i].real(), 1e-9);
    }
}

TEST(Eigenvalues, RejectsNonHermitian) {
    ComplexMatrix m(2, 2, {1.0, Complex(0, 1), Complex(0, 1), 1.0});
    try {
        hermitian_eigenvalues(m);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
    }
    EXPECT_THROW(RealSymMatrix(2, {1, 2, 3, 4}), Error);
}

TEST(SpectralNorm, LargestMagnitude) {
    EXPECT_NEAR(spectral_norm(RealSymMatrix(2, {16.0 / 3, -8.0 / 3, -8.0 / 3, 16.0 / 3})), 8.0, 1e-12);
    EXPECT_NEAR(spectral_norm(RealSymMatrix(2, {-5, 0, 0, 1})), 5.0, 1e-12);
}

TEST(GramSchmidtReal, OrthonormalWithRealCoefficients) {
    std::mt19937_64 rng(3);
    // Real combinations of two complex vectors share real inner products.
    const ComplexVector a = random_unit_vector(6, rng);
    ComplexVector b = random_unit_vector(6, rng);
    const Complex ab = inner(a, b);
    for (std::size_t i = 0; i < 6; ++i) b[i] -= Complex(0, ab.imag()) * a[i];  // make <a|b> real
    ComplexVector c(6);
    for (std::size_t i = 0; i < 6; ++i) c[i] = 0.3 * a[i] - 1.7 * b[i];
    const std::vector<ComplexVector> in{a, b, c};
    const RealSpan span = gram_schmidt_real_span(in, 1e-10);
    ASSERT_EQ(span.vectors.size(), 2u);
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t j = 0; j < 2; ++j) {
            EXPECT_NEAR(std::abs(inner(span.vectors[k], span.vectors[j])), k == j ? 1.0 : 0.0, 1e-12);
        }
        ComplexVector rebuilt(6);
        for (std::size_t m = 0; m < 3; ++m)
            for (std::size_t i = 0; i < 6; ++i) rebuilt[i] += span.coefficients[m][k] * in[m][i];
        for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(std::abs(rebuilt[i] - span.vectors[k][i]), 0.0, 1e-12);
    }
}

TEST(GramSchmidtReal, ComplexGramRejected) {
    ComplexVector a{1.0, 0.0};
    ComplexVector b{Complex(0, 1), 1.0};
    const std::vector<ComplexVector> in{a, b};
    try {
        gram_schmidt_real_span(in, 1e-10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ComplexGram);
    }
}

TEST(RandomUnitary, IsUnitary) {
    std::mt19937_64 rng(1);
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(is_unitary(random_unitary(n, rng), 1e-12));
}
