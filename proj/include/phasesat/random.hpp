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

#include <random>
#include <vector>

#include "phasesat/fisher.hpp"
#include "phasesat/fock.hpp"
#include "phasesat/numeric.hpp"

namespace phasesat {

/// Haar-random n x n unitary (QR of a complex Gaussian matrix with the
/// phases of R's diagonal divided out).
ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

/// Uniformly random unit vector of length n.
ComplexVector random_unit_vector(std::size_t n, std::mt19937_64& rng);

/// Complete projector set whose rows are the columns of `basis_change`
/// applied to the canonical basis vectors.
ProjectorSet rotated_basis_set(BasisPtr basis, const ComplexMatrix& basis_change);

/// {psi} followed by a random orthonormal basis of its orthogonal complement.
ProjectorSet probe_orthogonal_set(const StateVector& psi, std::mt19937_64& rng);

}  // namespace phasesat
