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

#include "reference_checks.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "phasesat/fisher.hpp"
#include "phasesat/interferometer.hpp"
#include "phasesat/random.hpp"
#include "phasesat/saturation.hpp"
#include "phasesat/scan.hpp"

namespace phasesat::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string matrix_string(const RealSymMatrix& m) {
    std::ostringstream s;
    s << '[';
    for (std::size_t r = 0; r < m.dim(); ++r) {
        s << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.dim(); ++c) s << (c ? ", " : "") << fmt(m(r, c));
        s << ']';
    }
    s << ']';
    return s.str();
}

double max_dev(const RealSymMatrix& a, const RealSymMatrix& b) { return (a - b).max_abs(); }

RealSymMatrix sym2(double a, double b, double c) { return RealSymMatrix(2, {a, b, b, c}); }

const std::vector<std::vector<double>>& sample_thetas() {
    static const std::vector<std::vector<double>> t = {{0, 0}, {0.7, 0.3}, {1.9, -2.4}, {kPi, 0.5}, {5.1, 2.2}};
    return t;
}

CheckOutcome qfim_check(const ModelPtr& model, const RealSymMatrix& expected, const std::string& label) {
    double worst = 0.0;
    for (const auto& th : sample_thetas()) worst = std::max(worst, max_dev(qfim(model->derivative_states(th)), expected));
    return {label, "max entry deviation " + fmt(worst) + " over 5 phase points", 1e-9, worst < 1e-9};
}

CheckOutcome fim3() {
    const ModelPtr m = mzi3();
    const std::vector<double> th{0, 0};
    const FisherPair p = fisher_pair(*m, th, ProjectorSet::fock(m->basis()));
    const RealSymMatrix expected = sym2(4.0 / 3, 4.0 / 3, 4.0 / 3);
    const double dev = max_dev(p.fim, expected);
    return {"(4/3)[[1,1],[1,1]]", matrix_string(p.fim), 1e-6, dev < 1e-6};
}

CheckOutcome norm8() {
    const ModelPtr m = mzi3();
    const double n = spectral_norm(qfim(m->derivative_states(std::vector<double>{0, 0})));
    return {"8", fmt(n), 1e-9, std::abs(n - 8.0) < 1e-9};
}

CheckOutcome ck3() {
    const ModelPtr m = mzi3();
    const DerivativeBundle b = m->derivative_states(std::vector<double>{0, 0});
    const ProjectorSet set = ProjectorSet::fock(m->basis());
    const double c = 1.0 / (3.0 * std::sqrt(3.0));
    // C_k = Im[<d_1 psi|Y_k><Y_k|d_2 psi>] for every Fock projector.
    std::ostringstream s;
    bool pass = true;
    double group_a = 0.0, group_b = 0.0;
    for (std::size_t k = 0; k < set.size(); ++k) {
        const double ck = (inner(b.dpsi[0], set[k]) * inner(set[k], b.dpsi[1])).imag();
        const std::string& label = set.labels()[k];
        s << label << '=' << fmt(ck) << ' ';
        if (label == "|2,1,0>" || label == "|1,0,2>" || label == "|0,2,1>") {
            pass = pass && std::abs(std::abs(ck) - c) < 1e-9;
            if (group_a == 0.0) group_a = ck;
            pass = pass && std::abs(ck - group_a) < 1e-9;
        } else if (label == "|2,0,1>" || label == "|1,2,0>" || label == "|0,1,2>") {
            pass = pass && std::abs(std::abs(ck) - c) < 1e-9;
            if (group_b == 0.0) group_b = ck;
            pass = pass && std::abs(ck - group_b) < 1e-9;
        } else {
            pass = pass && std::abs(ck) < 1e-9;
        }
    }
    pass = pass && group_a * group_b < 0.0;
    return {"|C_k|=1/(3sqrt3)=" + fmt(c) + " with opposite signs on the two triples, 0 otherwise", s.str(), 1e-9,
            pass};
}

CheckOutcome gap3() {
    ScanConfig cfg;
    cfg.resolution = {41, 41};
    const GridResult r = run_scan(*mzi3(), cfg);
    return {"min gap > 3/4 (+1e-3 margin) on 41x41", "min gap " + fmt(r.min_gap), 1e-3, r.min_gap > 0.75 + 1e-3};
}

CheckOutcome locus4() {
    const ModelPtr m = mzi4();
    const ProjectorSet set = ProjectorSet::fock(m->basis());
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double t = 2.0 * kPi * i / 11.0;
        worst = std::max(worst, fisher_pair(*m, std::vector<double>{t, t}, set).gap);
    }
    for (const auto& th : {std::vector<double>{0, kPi}, std::vector<double>{kPi, 0}}) {
        worst = std::max(worst, fisher_pair(*m, th, set).gap);
    }
    return {"gap < 1e-6 on theta1=theta2 and at (0,pi), (pi,0)", "max gap " + fmt(worst), 1e-6, worst < 1e-6};
}

CheckOutcome verdicts() {
    const ProjectorSet s3 = ProjectorSet::fock(mzi3()->basis());
    const ProjectorSet s4 = ProjectorSet::fock(mzi4()->basis());
    const Verdict v3 = check_saturation(*mzi3(), std::vector<double>{0, 0}, s3).verdict;
    const Verdict a = check_saturation(*mzi4(), std::vector<double>{0, 0}, s4).verdict;
    const Verdict b = check_saturation(*mzi4(), std::vector<double>{0, kPi}, s4).verdict;
    const Verdict c = check_saturation(*mzi4(), std::vector<double>{kPi, 0}, s4).verdict;
    const bool pass = v3 == Verdict::DoesNotSaturate && a == Verdict::Saturates && b == Verdict::Saturates &&
                      c == Verdict::Saturates;
    return {"mzi3(0,0) DoesNotSaturate; mzi4 (0,0), (0,pi), (pi,0) Saturates",
            to_string(v3) + "; " + to_string(a) + ", " + to_string(b) + ", " + to_string(c), 0.0, pass};
}

CheckOutcome single_parameter() {
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t modes = 2 + trial % 2;
        std::vector<int> probe(modes, 0);
        probe[0] = 1 + trial % 2;
        probe[modes - 1] = 1;
        const ModelPtr m = InterferometerModel::create(random_unitary(modes, rng), {static_cast<std::size_t>(trial % 2)},
                                                       Occupation(probe));
        const std::vector<double> th{angle(rng)};
        const DerivativeBundle b = m->derivative_states(th);
        const ProjectorSet set = probe_orthogonal_set(b.psi, rng);
        worst = std::max(worst, fisher_pair(b, set).gap);
    }
    return {"F = F_Q for d=1 with probe-orthogonal sets", "max gap " + fmt(worst) + " over 10 models", 1e-8,
            worst < 1e-8};
}

}  // namespace

const std::vector<ReferenceCheck>& reference_checks() {
    static const std::vector<ReferenceCheck> checks = {
        {"qfim3", "3-mode QFIM", [] { return qfim_check(mzi3(), sym2(16.0 / 3, -8.0 / 3, 16.0 / 3), "(8/3)[[2,-1],[-1,2]]"); }},
        {"qfim4", "4-mode QFIM", [] { return qfim_check(mzi4(), sym2(6, -2, 6), "2[[3,-1],[-1,3]]"); }},
        {"fim3", "3-mode FIM at the origin", fim3},
        {"norm8", "spectral norm of the 3-mode QFIM", norm8},
        {"ck3", "C_k table at the origin", ck3},
        {"gap3", "3-mode gap floor", gap3},
        {"locus4", "4-mode saturation locus", locus4},
        {"verdicts", "saturation verdicts", verdicts},
        {"single", "single-parameter saturation", single_parameter},
    };
    return checks;
}

}  // namespace phasesat::cli
