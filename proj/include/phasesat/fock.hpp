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

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "phasesat/numeric.hpp"

namespace phasesat {

/// Photon count per mode, e.g. |2,1,0>.
class Occupation {
public:
    Occupation() = default;
    explicit Occupation(std::vector<int> counts);

    std::size_t modes() const noexcept { return counts_.size(); }
    int total() const noexcept { return total_; }
    int operator[](std::size_t mode) const { return counts_[mode]; }
    const std::vector<int>& counts() const noexcept { return counts_; }

    /// "|2,1,0>"
    std::string label() const;

    friend bool operator==(const Occupation& a, const Occupation& b) { return a.counts_ == b.counts_; }
    friend auto operator<=>(const Occupation& a, const Occupation& b) { return a.counts_ <=> b.counts_; }

private:
    std::vector<int> counts_;
    int total_ = 0;
};

inline constexpr std::size_t kDefaultBasisCap = 1'000'000;

/// Fixed-photon-number Fock sector, ordered lexicographically descending
/// (|3,0,0> before |2,1,0>).
class FockBasis {
public:
    static std::shared_ptr<const FockBasis> enumerate(int photons, int modes,
                                                      std::size_t cap = kDefaultBasisCap);

    int modes() const noexcept { return modes_; }
    int photons() const noexcept { return photons_; }
    std::size_t dim() const noexcept { return states_.size(); }
    const Occupation& state(std::size_t i) const { return states_.at(i); }
    const std::vector<Occupation>& states() const noexcept { return states_; }

    /// Throws IndexOutOfRange when `occ` is not in this sector.
    std::size_t index_of(const Occupation& occ) const;
    bool contains(const Occupation& occ) const { return index_.contains(occ); }

    bool same_sector(const FockBasis& other) const {
        return modes_ == other.modes_ && photons_ == other.photons_;
    }

private:
    FockBasis(int photons, int modes, std::vector<Occupation> states);

    int modes_;
    int photons_;
    std::vector<Occupation> states_;
    std::map<Occupation, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

/// C(photons + modes - 1, modes - 1), saturating at SIZE_MAX.
std::size_t sector_dimension(int photons, int modes);

/// Amplitudes over a Fock basis.
class StateVector {
public:
    StateVector() = default;
    StateVector(BasisPtr basis, ComplexVector amplitudes);

    /// Checks | ||psi||^2 - 1 | <= tol and flags the result as normalized.
    static StateVector normalized(BasisPtr basis, ComplexVector amplitudes, double tol = 1e-10);
    static StateVector fock(BasisPtr basis, const Occupation& occ);

    const FockBasis& basis() const { return *basis_; }
    const BasisPtr& basis_ptr() const noexcept { return basis_; }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    ComplexVector& mutable_amplitudes() noexcept { return amplitudes_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }
    bool is_normalized() const noexcept { return normalized_; }

    double norm() const { return phasesat::norm(amplitudes_); }

private:
    BasisPtr basis_;
    ComplexVector amplitudes_;
    bool normalized_ = false;
};

/// <a|b>; throws BasisMismatch for different sectors.
Complex inner(const StateVector& a, const StateVector& b);

/// Fock-space representation of an m-mode unitary:
/// <T|U|S> = perm(U[T,S]) / sqrt(prod T_i! prod S_j!).
ComplexMatrix lift_unitary(const ComplexMatrix& mode_unitary, const FockBasis& basis, double unitary_tol = 1e-10);

/// Diagonal of the number operator n_mode.
std::vector<double> number_operator(std::size_t mode, const FockBasis& basis);

/// Diagonal of exp(i sum_l theta_l n_{phase_modes[l]}).
ComplexVector phase_layer(const FockBasis& basis, std::span<const std::size_t> phase_modes,
                          std::span<const double> theta);

}  // namespace phasesat
