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

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phasesat/fock.hpp"
#include "phasesat/numeric.hpp"

namespace phasesat {

class ParametricState;

/// |psi_s> at theta together with the d derivative states |d_l psi_s>.
struct DerivativeBundle {
    std::vector<double> theta;
    StateVector psi;
    std::vector<StateVector> dpsi;
    // Re-evaluates the family at nearby parameters; needed for the 0/0
    // limits at zero-probability outcomes. Null for hand-built bundles.
    std::shared_ptr<const ParametricState> source;

    std::size_t parameters() const noexcept { return dpsi.size(); }
    const FockBasis& basis() const { return psi.basis(); }

    /// Builds a bundle and checks |psi| = 1 and Re<d_l psi|psi> = 0 within `tol`.
    static DerivativeBundle make(std::vector<double> theta, StateVector psi, std::vector<StateVector> dpsi,
                                 std::shared_ptr<const ParametricState> source = nullptr, double tol = 1e-10);
};

/// A pure-state family theta -> |psi(theta)> with analytic derivatives.
class ParametricState {
public:
    virtual ~ParametricState() = default;
    virtual std::size_t parameter_count() const = 0;
    virtual const BasisPtr& basis() const = 0;
    virtual StateVector output_state(std::span<const double> theta) const = 0;
    virtual DerivativeBundle derivative_states(std::span<const double> theta) const = 0;
};

/// Balanced three-mode splitter: 1/sqrt(3) on the diagonal,
/// e^{i 2pi/3}/sqrt(3) elsewhere.
ComplexMatrix tritter();
/// Balanced four-mode splitter: +1/2 on the diagonal, -1/2 elsewhere.
ComplexMatrix quarter();
/// 50:50 two-mode splitter (1/sqrt2)[[1, i], [i, 1]].
ComplexMatrix balanced_beam_splitter();

struct ModelOptions {
    // Lets several parameters drive the same mode. Produces linearly
    // dependent derivative states; used to exercise singular QFIMs.
    bool allow_repeated_phase_modes = false;
    double unitary_tol = 1e-10;
    std::size_t basis_cap = kDefaultBasisCap;
};

/// Multimode Mach-Zehnder interferometer U(theta) = V P(theta) W, with the
/// recombiner V = W^{-1} unless given explicitly. Phases e^{+i theta_l} act
/// on `phase_modes` between the two splitters.
class InterferometerModel : public ParametricState,
                            public std::enable_shared_from_this<InterferometerModel> {
public:
    static std::shared_ptr<const InterferometerModel> create(ComplexMatrix splitter,
                                                             std::vector<std::size_t> phase_modes,
                                                             Occupation probe,
                                                             std::optional<ComplexMatrix> recombiner = std::nullopt,
                                                             ModelOptions options = {});

    std::size_t modes() const noexcept { return splitter_.rows(); }
    const ComplexMatrix& splitter() const noexcept { return splitter_; }
    const ComplexMatrix& recombiner() const noexcept { return recombiner_; }
    bool recombiner_is_inverse() const noexcept { return recombiner_is_inverse_; }
    const std::vector<std::size_t>& phase_modes() const noexcept { return phase_modes_; }
    const Occupation& probe() const noexcept { return probe_; }
    const ComplexMatrix& lifted_splitter() const noexcept { return lifted_splitter_; }
    const ComplexMatrix& lifted_recombiner() const noexcept { return lifted_recombiner_; }

    std::size_t parameter_count() const override { return phase_modes_.size(); }
    const BasisPtr& basis() const override { return basis_; }
    StateVector output_state(std::span<const double> theta) const override;
    DerivativeBundle derivative_states(std::span<const double> theta) const override;

private:
    InterferometerModel() = default;

    ComplexMatrix splitter_;
    ComplexMatrix recombiner_;
    bool recombiner_is_inverse_ = true;
    std::vector<std::size_t> phase_modes_;
    Occupation probe_;
    BasisPtr basis_;
    ComplexMatrix lifted_splitter_;
    ComplexMatrix lifted_recombiner_;
    ComplexVector split_probe_;  // lifted_splitter |probe>
    std::vector<std::vector<double>> number_diagonals_;
};

using ModelPtr = std::shared_ptr<const InterferometerModel>;

/// Tritter, probe |1,1,1>, phases on modes 0 and 1.
ModelPtr mzi3();
/// Quarter, probe |1,1,1,1>, phases on modes 0 and 1.
ModelPtr mzi4();
/// Builtin by name ("mzi3", "mzi4"); throws InvalidArgument otherwise.
ModelPtr builtin_model(const std::string& name);

inline StateVector output_state(const InterferometerModel& model, std::span<const double> theta) {
    return model.output_state(theta);
}
inline DerivativeBundle derivative_states(const InterferometerModel& model, std::span<const double> theta) {
    return model.derivative_states(theta);
}

}  // namespace phasesat
