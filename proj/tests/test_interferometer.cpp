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
#include "phasesat/fisher.hpp"
#include "phasesat/interferometer.hpp"
#include "phasesat/random.hpp"

using namespace phasesat;

namespace {

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(Splitters, AreUnitary) {
    EXPECT_TRUE(is_unitary(tritter(), 1e-14));
    EXPECT_TRUE(is_unitary(quarter(), 1e-14));
    EXPECT_TRUE(is_unitary(balanced_beam_splitter(), 1e-14));
    EXPECT_NEAR(std::arg(tritter()(0, 1)), 2.0 * M_PI / 3.0, 1e-15);
    EXPECT_DOUBLE_EQ(quarter()(0, 1).real(), -0.5);
}

TEST(Model, OutputStateMatchesOracle) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (const ModelPtr& m : {mzi3(), mzi4()}) {
        for (int t = 0; t < 10; ++t) {
            const std::vector<double> th{angle(rng), angle(rng)};
            const StateVector psi = m->output_state(th);
            EXPECT_NEAR(psi.norm(), 1.0, 1e-10);
            EXPECT_LE(max_diff(psi.amplitudes(), oracle::model_state(*m, th)), 1e-12);
        }
    }
}

TEST(Model, GeneralRecombinerMatchesOracle) {
    std::mt19937_64 rng(32);
    const ModelPtr m = InterferometerModel::create(random_unitary(3, rng), {2, 0}, Occupation({2, 0, 1}),
                                                   random_unitary(3, rng));
    EXPECT_FALSE(m->recombiner_is_inverse());
    const std::vector<double> th{0.3, 2.9};
    EXPECT_LE(max_diff(m->output_state(th).amplitudes(), oracle::model_state(*m, th)), 1e-12);
}

TEST(Model, DerivativesConvergeAtSecondOrder) {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (const ModelPtr& m : {mzi3(), mzi4()}) {
        for (int t = 0; t < 5; ++t) {
            const std::vector<double> th{angle(rng), angle(rng)};
            const DerivativeBundle b = m->derivative_states(th);
            for (std::size_t l = 0; l < 2; ++l) {
                const double e1 = max_diff(b.dpsi[l].amplitudes(), oracle::model_derivative(*m, th, l, 1e-2));
                const double e2 = max_diff(b.dpsi[l].amplitudes(), oracle::model_derivative(*m, th, l, 5e-3));
                EXPECT_LT(e1, 1e-3);
                EXPECT_NEAR(e1 / e2, 4.0, 0.1);
            }
        }
    }
}

TEST(Model, ProbeOverlapOfDerivativeIsImaginary) {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (const ModelPtr& m : {mzi3(), mzi4()}) {
        for (int t = 0; t < 20; ++t) {
            const DerivativeBundle b = m->derivative_states(std::vector<double>{angle(rng), angle(rng)});
            for (const StateVector& d : b.dpsi) EXPECT_NEAR(inner(d, b.psi).real(), 0.0, 1e-10);
        }
    }
}

TEST(Model, CommonPhaseOnAllModesIsGlobal) {
    ModelOptions opts;
    opts.allow_repeated_phase_modes = true;  // d = m phases
    const ModelPtr m = InterferometerModel::create(tritter(), {0, 1, 2}, Occupation({1, 1, 1}), std::nullopt, opts);
    const ProjectorSet set = ProjectorSet::fock(m->basis());
    const std::vector<double> th{0.4, 1.3, -0.2};
    const double c = 0.77;
    const std::vector<double> shifted{th[0] + c, th[1] + c, th[2] + c};
    const StateVector a = m->output_state(th);
    const StateVector b = m->output_state(shifted);
    EXPECT_NEAR(std::abs(inner(a, b)), 1.0, 1e-12);
    EXPECT_NEAR(std::arg(inner(a, b)), std::remainder(3 * c, 2 * M_PI), 1e-12);
    const FisherPair pa = fisher_pair(*m, th, set);
    const FisherPair pb = fisher_pair(*m, shifted, set);
    EXPECT_LE(max_abs_diff(pa.fim, pb.fim), 1e-9);
    EXPECT_LE(max_abs_diff(pa.qfim, pb.qfim), 1e-12);
}

TEST(Model, ValidationErrors) {
    EXPECT_EQ(kind_of([] { InterferometerModel::create(ComplexMatrix(2, 2, {1.0, 1.0, 0.0, 1.0}), {0}, Occupation({1, 0})); }),
              ErrorKind::NotUnitary);
    EXPECT_EQ(kind_of([] { InterferometerModel::create(tritter(), {3}, Occupation({1, 1, 1})); }),
              ErrorKind::IndexOutOfRange);
    EXPECT_EQ(kind_of([] { InterferometerModel::create(tritter(), {0}, Occupation({1, 1})); }),
              ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([] { InterferometerModel::create(tritter(), {0, 0}, Occupation({1, 1, 1})); }),
              ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { InterferometerModel::create(tritter(), {0, 1, 2}, Occupation({1, 1, 1})); }),
              ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { mzi3()->output_state(std::vector<double>{0.0}); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([] { builtin_model("mzi5"); }), ErrorKind::InvalidArgument);
}

TEST(DerivativeBundle, RejectsInvalidFamilies) {
    const BasisPtr b = FockBasis::enumerate(1, 2);
    const StateVector psi = StateVector::fock(b, Occupation({1, 0}));
    // Re<d psi|psi> != 0
    EXPECT_THROW(DerivativeBundle::make({0.0}, psi, {psi}), Error);
    const StateVector half(b, {0.5, 0.0});
    EXPECT_THROW(DerivativeBundle::make({0.0}, half, {StateVector(b, {0.0, 1.0})}), Error);
    EXPECT_NO_THROW(DerivativeBundle::make({0.0}, psi, {StateVector(b, {Complex(0, 1), 0.0})}));
}
