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

#include "phasesat/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "phasesat/error.hpp"

namespace phasesat {

DerivativeBundle DerivativeBundle::make(std::vector<double> theta, StateVector psi, std::vector<StateVector> dpsi,
                                        std::shared_ptr<const ParametricState> source, double tol) {
    if (theta.size() != dpsi.size()) throw Error(ErrorKind::DimensionMismatch, "theta arity vs derivative count");
    const double n2 = psi.norm() * psi.norm();
    if (std::abs(n2 - 1.0) > tol) throw Error(ErrorKind::InvalidArgument, "probe output is not normalized", n2);
    for (const StateVector& d : dpsi) {
        const double re = inner(d, psi).real();
        if (std::abs(re) > tol) {
            throw Error(ErrorKind::InvalidArgument, "Re<d psi|psi> must vanish for a normalized family", re);
        }
    }
    DerivativeBundle b;
    b.theta = std::move(theta);
    b.psi = std::move(psi);
    b.dpsi = std::move(dpsi);
    b.source = std::move(source);
    return b;
}

ComplexMatrix tritter() {
    const double s = 1.0 / std::sqrt(3.0);
    const Complex off = std::polar(s, 2.0 * std::numbers::pi / 3.0);
    ComplexMatrix u(3, 3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) u(j, k) = (j == k) ? Complex(s) : off;
    return u;
}

ComplexMatrix quarter() {
    ComplexMatrix u(4, 4);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) u(j, k) = (j == k) ? 0.5 : -0.5;
    return u;
}

ComplexMatrix balanced_beam_splitter() {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix(2, 2, {Complex(s), Complex(0, s), Complex(0, s), Complex(s)});
}

std::shared_ptr<const InterferometerModel> InterferometerModel::create(ComplexMatrix splitter,
                                                                       std::vector<std::size_t> phase_modes,
                                                                       Occupation probe,
                                                                       std::optional<ComplexMatrix> recombiner,
                                                                       ModelOptions options) {
    if (!splitter.square() || splitter.rows() == 0) throw Error(ErrorKind::NotSquare, "splitter must be square");
    const std::size_t m = splitter.rows();
    if (!is_unitary(splitter, options.unitary_tol)) throw Error(ErrorKind::NotUnitary, "splitter is not unitary");
    if (probe.modes() != m) throw Error(ErrorKind::DimensionMismatch, "probe length differs from mode count");
    for (std::size_t pm : phase_modes) {
        if (pm >= m) throw Error(ErrorKind::IndexOutOfRange, "phase mode " + std::to_string(pm) + " out of range");
    }
    if (!options.allow_repeated_phase_modes) {
        if (std::set<std::size_t>(phase_modes.begin(), phase_modes.end()).size() != phase_modes.size()) {
            throw Error(ErrorKind::InvalidArgument, "phase modes must be distinct");
        }
        if (phase_modes.size() > m - 1) {
            throw Error(ErrorKind::InvalidArgument, "at most modes-1 phases can be estimated");
        }
    }

    std::shared_ptr<InterferometerModel> model(new InterferometerModel());
    model->recombiner_is_inverse_ = !recombiner.has_value();
    model->recombiner_ = recombiner ? std::move(*recombiner) : splitter.adjoint();
    if (model->recombiner_.rows() != m || !model->recombiner_.square()) {
        throw Error(ErrorKind::DimensionMismatch, "recombiner shape differs from splitter");
    }
    if (!is_unitary(model->recombiner_, options.unitary_tol)) {
        throw Error(ErrorKind::NotUnitary, "recombiner is not unitary");
    }
    model->splitter_ = std::move(splitter);
    model->phase_modes_ = std::move(phase_modes);
    model->probe_ = std::move(probe);
    model->basis_ = FockBasis::enumerate(model->probe_.total(), static_cast<int>(m), options.basis_cap);
    model->lifted_splitter_ = lift_unitary(model->splitter_, *model->basis_, options.unitary_tol);
    model->lifted_recombiner_ = lift_unitary(model->recombiner_, *model->basis_, options.unitary_tol);

    ComplexVector probe_amps(model->basis_->dim());
    probe_amps[model->basis_->index_of(model->probe_)] = 1.0;
    model->split_probe_ = model->lifted_splitter_.apply(probe_amps);
    for (std::size_t pm : model->phase_modes_) model->number_diagonals_.push_back(number_operator(pm, *model->basis_));
    return model;
}

StateVector InterferometerModel::output_state(std::span<const double> theta) const {
    if (theta.size() != phase_modes_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(phase_modes_.size()) + " phases");
    }
    const ComplexVector layer = phase_layer(*basis_, phase_modes_, theta);
    ComplexVector mid(split_probe_.size());
    for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = layer[i] * split_probe_[i];
    return StateVector::normalized(basis_, lifted_recombiner_.apply(mid));
}

DerivativeBundle InterferometerModel::derivative_states(std::span<const double> theta) const {
    if (theta.size() != phase_modes_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(phase_modes_.size()) + " phases");
    }
    const ComplexVector layer = phase_layer(*basis_, phase_modes_, theta);
    ComplexVector mid(split_probe_.size());
    for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = layer[i] * split_probe_[i];
    StateVector psi = StateVector::normalized(basis_, lifted_recombiner_.apply(mid));

    // d/dtheta_l of e^{i theta_l n_l} inserts i n_l.
    std::vector<StateVector> dpsi;
    dpsi.reserve(phase_modes_.size());
    const Complex i_unit(0.0, 1.0);
    for (const std::vector<double>& n_diag : number_diagonals_) {
        ComplexVector dmid(mid.size());
        for (std::size_t i = 0; i < mid.size(); ++i) dmid[i] = i_unit * n_diag[i] * mid[i];
        dpsi.emplace_back(basis_, lifted_recombiner_.apply(dmid));
    }
    return DerivativeBundle::make(std::vector<double>(theta.begin(), theta.end()), std::move(psi), std::move(dpsi),
                                  shared_from_this());
}

ModelPtr mzi3() { return InterferometerModel::create(tritter(), {0, 1}, Occupation({1, 1, 1})); }

ModelPtr mzi4() { return InterferometerModel::create(quarter(), {0, 1}, Occupation({1, 1, 1, 1})); }

ModelPtr builtin_model(const std::string& name) {
    if (name == "mzi3") return mzi3();
    if (name == "mzi4") return mzi4();
    throw Error(ErrorKind::InvalidArgument, "unknown builtin model '" + name + "'");
}

}  // namespace phasesat
