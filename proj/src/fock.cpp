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

#include "phasesat/fock.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "phasesat/error.hpp"

namespace phasesat {

Occupation::Occupation(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_) {
        if (c < 0) throw Error(ErrorKind::InvalidArgument, "negative photon count");
        total_ += c;
    }
}

std::string Occupation::label() const {
    std::string out = "|";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(counts_[i]);
    }
    return out + ">";
}

std::size_t sector_dimension(int photons, int modes) {
    if (photons < 0 || modes < 1) return 0;
    // C(photons + modes - 1, modes - 1), built incrementally so every partial
    // product is itself a binomial coefficient.
    const auto k = static_cast<unsigned long long>(modes - 1);
    const auto n = static_cast<unsigned long long>(photons) + k;
    unsigned long long result = 1;
    for (unsigned long long i = 1; i <= k; ++i) {
        const unsigned long long num = n - k + i;
        if (result > std::numeric_limits<unsigned long long>::max() / num) {
            return std::numeric_limits<std::size_t>::max();
        }
        result = result * num / i;
    }
    return static_cast<std::size_t>(result);
}

namespace {

void enumerate_descending(int remaining, std::size_t mode, std::vector<int>& current,
                          std::vector<Occupation>& out) {
    if (mode + 1 == current.size()) {
        current[mode] = remaining;
        out.emplace_back(current);
        return;
    }
    for (int c = remaining; c >= 0; --c) {
        current[mode] = c;
        enumerate_descending(remaining - c, mode + 1, current, out);
    }
}

}  // namespace

FockBasis::FockBasis(int photons, int modes, std::vector<Occupation> states)
    : modes_(modes), photons_(photons), states_(std::move(states)) {
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::shared_ptr<const FockBasis> FockBasis::enumerate(int photons, int modes, std::size_t cap) {
    if (photons < 0) throw Error(ErrorKind::InvalidArgument, "photon number must be >= 0");
    if (modes < 1) throw Error(ErrorKind::InvalidArgument, "mode count must be >= 1");
    const std::size_t dim = sector_dimension(photons, modes);
    if (dim > cap) {
        throw Error(ErrorKind::SizeOverflow,
                    "Fock sector dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap),
                    static_cast<double>(dim));
    }
    std::vector<Occupation> states;
    states.reserve(dim);
    std::vector<int> current(static_cast<std::size_t>(modes), 0);
    enumerate_descending(photons, 0, current, states);
    return std::shared_ptr<const FockBasis>(new FockBasis(photons, modes, std::move(states)));
}

std::size_t FockBasis::index_of(const Occupation& occ) const {
    auto it = index_.find(occ);
    if (it == index_.end()) throw Error(ErrorKind::IndexOutOfRange, occ.label() + " is not in this Fock sector");
    return it->second;
}

// ---------------------------------------------------------------------------

StateVector::StateVector(BasisPtr basis, ComplexVector amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    if (!basis_) throw Error(ErrorKind::InvalidArgument, "state vector without basis");
    if (amplitudes_.size() != basis_->dim()) {
        throw Error(ErrorKind::DimensionMismatch, "amplitude count does not match basis dimension");
    }
    if (!all_finite(amplitudes_)) throw Error(ErrorKind::InvalidArgument, "non-finite amplitude");
}

StateVector StateVector::normalized(BasisPtr basis, ComplexVector amplitudes, double tol) {
    StateVector s(std::move(basis), std::move(amplitudes));
    const double n2 = s.norm() * s.norm();
    if (std::abs(n2 - 1.0) > tol) throw Error(ErrorKind::InvalidArgument, "state is not normalized", n2);
    s.normalized_ = true;
    return s;
}

StateVector StateVector::fock(BasisPtr basis, const Occupation& occ) {
    ComplexVector amps(basis->dim());
    amps[basis->index_of(occ)] = 1.0;
    return normalized(std::move(basis), std::move(amps));
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (!a.basis().same_sector(b.basis())) throw Error(ErrorKind::BasisMismatch, "states live in different sectors");
    return inner(a.amplitudes(), b.amplitudes());
}

// ---------------------------------------------------------------------------

namespace {

double factorial(int n) {
    static const std::array<double, 21> table = [] {
        std::array<double, 21> t{};
        t[0] = 1.0;
        for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
        return t;
    }();
    if (n <= 20) return table[static_cast<std::size_t>(n)];
    return std::exp(std::lgamma(static_cast<double>(n) + 1.0));
}

std::vector<std::size_t> repeated_modes(const Occupation& occ) {
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(occ.total()));
    for (std::size_t m = 0; m < occ.modes(); ++m)
        for (int c = 0; c < occ[m]; ++c) out.push_back(m);
    return out;
}

double occupation_norm(const Occupation& occ) {
    double prod = 1.0;
    for (int c : occ.counts()) prod *= factorial(c);
    return prod;
}

}  // namespace

ComplexMatrix lift_unitary(const ComplexMatrix& u, const FockBasis& basis, double unitary_tol) {
    if (!u.square() || u.rows() != static_cast<std::size_t>(basis.modes())) {
        throw Error(ErrorKind::DimensionMismatch, "mode unitary does not match basis mode count");
    }
    if (!is_unitary(u, unitary_tol)) throw Error(ErrorKind::NotUnitary, "mode matrix is not unitary");

    const std::size_t dim = basis.dim();
    const auto n = static_cast<std::size_t>(basis.photons());
    std::vector<std::vector<std::size_t>> expanded(dim);
    std::vector<double> norms(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        expanded[i] = repeated_modes(basis.state(i));
        norms[i] = occupation_norm(basis.state(i));
    }

    ComplexMatrix lifted(dim, dim);
    ComplexMatrix sub(n, n);
    for (std::size_t t = 0; t < dim; ++t) {
        for (std::size_t s = 0; s < dim; ++s) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) sub(a, b) = u(expanded[t][a], expanded[s][b]);
            lifted(t, s) = permanent(sub) / std::sqrt(norms[t] * norms[s]);
        }
    }
    return lifted;
}

std::vector<double> number_operator(std::size_t mode, const FockBasis& basis) {
    if (mode >= static_cast<std::size_t>(basis.modes())) throw Error(ErrorKind::IndexOutOfRange, "mode index");
    std::vector<double> diag(basis.dim());
    for (std::size_t i = 0; i < basis.dim(); ++i) diag[i] = basis.state(i)[mode];
    return diag;
}

ComplexVector phase_layer(const FockBasis& basis, std::span<const std::size_t> phase_modes,
                          std::span<const double> theta) {
    if (phase_modes.size() != theta.size()) throw Error(ErrorKind::DimensionMismatch, "theta arity");
    ComplexVector diag(basis.dim());
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        double phase = 0.0;
        for (std::size_t l = 0; l < theta.size(); ++l) phase += basis.state(i)[phase_modes[l]] * theta[l];
        diag[i] = std::polar(1.0, phase);
    }
    return diag;
}

}  // namespace phasesat
