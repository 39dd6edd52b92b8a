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
#include <set>

#include "oracles.hpp"
#include "phasesat/error.hpp"
#include "phasesat/fock.hpp"
#include "phasesat/interferometer.hpp"
#include "phasesat/random.hpp"

using namespace phasesat;

TEST(FockBasis, DimensionsAndOrdering) {
    const BasisPtr b3 = FockBasis::enumerate(3, 3);
    EXPECT_EQ(b3->dim(), 10u);
    EXPECT_EQ(FockBasis::enumerate(4, 4)->dim(), 35u);
    EXPECT_EQ(b3->state(0).label(), "|3,0,0>");
    EXPECT_EQ(b3->state(1).label(), "|2,1,0>");
    EXPECT_EQ(b3->state(9).label(), "|0,0,3>");
    for (std::size_t i = 1; i < b3->dim(); ++i) EXPECT_TRUE(b3->state(i - 1) > b3->state(i));
    EXPECT_EQ(b3->index_of(Occupation({1, 1, 1})), 4u);
    EXPECT_EQ(sector_dimension(3, 3), 10u);
    EXPECT_EQ(sector_dimension(0, 5), 1u);
}

TEST(FockBasis, ErrorsAndEdgeCases) {
    EXPECT_EQ(FockBasis::enumerate(0, 3)->dim(), 1u);
    try {
        FockBasis::enumerate(30, 30, 1000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeOverflow);
    }
    const BasisPtr b = FockBasis::enumerate(2, 2);
    EXPECT_THROW(b->index_of(Occupation({1, 0})), Error);
    EXPECT_FALSE(b->contains(Occupation({3, 0})));
}

TEST(StateVector, InnerProductAndMismatch) {
    const BasisPtr b = FockBasis::enumerate(2, 2);
    const StateVector a = StateVector::fock(b, Occupation({2, 0}));
    const StateVector c = StateVector::fock(b, Occupation({1, 1}));
    EXPECT_EQ(inner(a, a), Complex(1.0));
    EXPECT_EQ(inner(a, c), Complex(0.0));
    const StateVector other = StateVector::fock(FockBasis::enumerate(1, 2), Occupation({1, 0}));
    try {
        inner(a, other);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BasisMismatch);
    }
    EXPECT_THROW(StateVector::normalized(b, {1.0, 1.0, 0.0}), Error);
}

TEST(Lift, MatchesCreationOperatorExpansion) {
    std::mt19937_64 rng(21);
    for (auto [n, m] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{2, 4}, std::pair{4, 3}}) {
        const BasisPtr b = FockBasis::enumerate(n, m);
        const ComplexMatrix u = random_unitary(m, rng);
        EXPECT_LE(max_abs_diff(lift_unitary(u, *b), oracle::lift(u, *b)), 1e-12);
    }
}

TEST(Lift, IsHomomorphismAndUnitary) {
    std::mt19937_64 rng(22);
    const BasisPtr b = FockBasis::enumerate(3, 3);
    for (int t = 0; t < 5; ++t) {
        const ComplexMatrix u = random_unitary(3, rng);
        const ComplexMatrix v = random_unitary(3, rng);
        const ComplexMatrix lu = lift_unitary(u, *b);
        EXPECT_TRUE(is_unitary(lu, 1e-12));
        EXPECT_LE(max_abs_diff(lift_unitary(u * v, *b), lu * lift_unitary(v, *b)), 1e-12);
        EXPECT_LE(max_abs_diff(lift_unitary(u.adjoint(), *b), lu.adjoint()), 1e-12);
    }
}

TEST(Lift, RejectsNonUnitary) {
    ComplexMatrix m(2, 2, {1.0, 1.0, 0.0, 1.0});
    try {
        lift_unitary(m, *FockBasis::enumerate(1, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotUnitary);
    }
}

TEST(Lift, HongOuMandelDip) {
    const BasisPtr b = FockBasis::enumerate(2, 2);
    const ComplexMatrix l = lift_unitary(balanced_beam_splitter(), *b);
    EXPECT_NEAR(std::abs(l(b->index_of(Occupation({1, 1})), b->index_of(Occupation({1, 1})))), 0.0, 1e-15);
}

TEST(PhaseLayer, NumberOperatorExponent) {
    const BasisPtr b = FockBasis::enumerate(3, 3);
    const std::vector<std::size_t> modes{0, 1};
    const std::vector<double> theta{0.4, -1.1};
    const ComplexVector layer = phase_layer(*b, modes, theta);
    const auto n0 = number_operator(0, *b);
    const auto n1 = number_operator(1, *b);
    for (std::size_t i = 0; i < b->dim(); ++i) {
        EXPECT_NEAR(std::abs(layer[i] - std::polar(1.0, 0.4 * n0[i] - 1.1 * n1[i])), 0.0, 1e-15);
        EXPECT_EQ(n0[i], b->state(i)[0]);
    }
}
