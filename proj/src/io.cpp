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

#include "phasesat/io.hpp"

#include <fstream>

#include "phasesat/error.hpp"

namespace phasesat {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
    }
}

ProjectorClass projector_class_from(const std::string& s) {
    if (s == "h") return ProjectorClass::Orthogonal;
    if (s == "q") return ProjectorClass::NonOrthogonal;
    if (s == "probe") return ProjectorClass::Probe;
    throw Error(ErrorKind::ParseError, "unknown projector tag '" + s + "'");
}

ConditionId condition_from(const std::string& s) {
    if (s == "T1") return ConditionId::T1;
    if (s == "T2") return ConditionId::T2;
    if (s == "WC") return ConditionId::WC;
    throw Error(ErrorKind::ParseError, "unknown condition '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
    for (Verdict v : {Verdict::Saturates, Verdict::DoesNotSaturate, Verdict::IndeterminateFirstOrder}) {
        if (to_string(v) == s) return v;
    }
    throw Error(ErrorKind::ParseError, "unknown verdict '" + s + "'");
}

Json residual_json(const ConditionResidual& r) {
    return Json{{"projector", r.projector},
                {"condition", to_string(r.condition)},
                {"residual", r.residual},
                {"signed", r.signed_value},
                {"l", r.l},
                {"m", r.m},
                {"indeterminate_first_order", r.indeterminate_first_order},
                {"unresolved", r.unresolved}};
}

ConditionResidual residual_from(const Json& j) {
    ConditionResidual r;
    r.projector = field<std::size_t>(j, "projector");
    r.condition = condition_from(field<std::string>(j, "condition"));
    r.residual = field<double>(j, "residual");
    r.signed_value = field<double>(j, "signed");
    r.l = field<std::size_t>(j, "l");
    r.m = field<std::size_t>(j, "m");
    r.indeterminate_first_order = field<bool>(j, "indeterminate_first_order");
    r.unresolved = field<bool>(j, "unresolved");
    return r;
}

}  // namespace

ModelPtr ModelSpec::build(const ModelOptions& options) const {
    return InterferometerModel::create(splitter, phase_modes, Occupation(probe), recombiner, options);
}

ModelSpec builtin_model_spec(const std::string& name) {
    ModelSpec s;
    if (name == "mzi3") {
        s.modes = 3;
        s.splitter_name = "tritter";
        s.splitter = tritter();
        s.probe = {1, 1, 1};
    } else if (name == "mzi4") {
        s.modes = 4;
        s.splitter_name = "quarter";
        s.splitter = quarter();
        s.probe = {1, 1, 1, 1};
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown builtin model '" + name + "'");
    }
    s.phase_modes = {0, 1};
    return s;
}

Json to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix complex_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error(ErrorKind::ParseError, "matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw Error(ErrorKind::ParseError, "ragged matrix row");
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& z = j[r][c];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw Error(ErrorKind::ParseError, "matrix entries must be [re, im] pairs");
            }
            m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
        }
    }
    return m;
}

Json to_json(const RealSymMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

ModelSpec model_spec_from_json(const Json& j) {
    ModelSpec s;
    s.modes = field<int>(j, "modes");
    if (s.modes < 1) throw Error(ErrorKind::ParseError, "modes must be positive");
    if (!j.contains("splitter")) throw Error(ErrorKind::ParseError, "missing field 'splitter'");
    const Json& sp = j.at("splitter");
    if (sp.is_string()) {
        s.splitter_name = sp.get<std::string>();
        if (s.splitter_name == "tritter") s.splitter = tritter();
        else if (s.splitter_name == "quarter") s.splitter = quarter();
        else throw Error(ErrorKind::ParseError, "unknown splitter '" + s.splitter_name + "'");
    } else {
        s.splitter = complex_matrix_from_json(sp);
    }
    if (s.splitter.rows() != static_cast<std::size_t>(s.modes) || !s.splitter.square()) {
        throw Error(ErrorKind::ParseError, "splitter shape does not match 'modes'");
    }
    s.phase_modes = field<std::vector<std::size_t>>(j, "phase_modes");
    s.probe = field<std::vector<int>>(j, "probe");
    if (s.probe.size() != static_cast<std::size_t>(s.modes)) {
        throw Error(ErrorKind::ParseError, "probe length does not match 'modes'");
    }
    for (int n : s.probe) {
        if (n < 0) throw Error(ErrorKind::ParseError, "probe occupations must be non-negative");
    }
    if (j.contains("recombiner")) s.recombiner = complex_matrix_from_json(j.at("recombiner"));
    return s;
}

Json to_json(const ModelSpec& spec) {
    Json j;
    j["modes"] = spec.modes;
    j["splitter"] = spec.splitter_name.empty() ? to_json(spec.splitter) : Json(spec.splitter_name);
    j["phase_modes"] = spec.phase_modes;
    j["probe"] = spec.probe;
    if (spec.recombiner) j["recombiner"] = to_json(*spec.recombiner);
    return j;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
}

ModelSpec load_model_spec(const std::string& source) {
    if (source == "mzi3" || source == "mzi4") return builtin_model_spec(source);
    return model_spec_from_json(read_json_file(source));
}

Json to_json(const ProjectorSet& set) {
    Json states = Json::array();
    for (const Occupation& o : set.basis().states()) states.push_back(o.counts());
    Json projectors = Json::array();
    for (std::size_t k = 0; k < set.size(); ++k) {
        Json amps = Json::array();
        for (const Complex& z : set[k].amplitudes()) amps.push_back({z.real(), z.imag()});
        projectors.push_back(Json{{"label", set.labels()[k]}, {"amplitudes", std::move(amps)}});
    }
    return Json{{"basis", Json{{"modes", set.basis().modes()}, {"photons", set.basis().photons()}, {"states", states}}},
                {"projectors", std::move(projectors)}};
}

ProjectorSet projector_set_from_json(const Json& j, BasisPtr basis, const Tolerances& tol) {
    const Json b = field<Json>(j, "basis");
    if (field<int>(b, "modes") != basis->modes() || field<int>(b, "photons") != basis->photons()) {
        throw Error(ErrorKind::BasisMismatch, "projector file is for a different Fock sector");
    }
    if (b.contains("states")) {
        const auto states = field<std::vector<std::vector<int>>>(b, "states");
        if (states.size() != basis->dim()) throw Error(ErrorKind::BasisMismatch, "basis size differs");
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (states[i] != basis->state(i).counts()) throw Error(ErrorKind::BasisMismatch, "basis order differs");
        }
    }
    const Json list = field<Json>(j, "projectors");
    if (!list.is_array()) throw Error(ErrorKind::ParseError, "'projectors' must be an array");
    std::vector<StateVector> projectors;
    std::vector<std::string> labels;
    for (const Json& p : list) {
        const Json amps = field<Json>(p, "amplitudes");
        if (!amps.is_array() || amps.size() != basis->dim()) {
            throw Error(ErrorKind::DimensionMismatch, "projector amplitude count differs from basis dimension");
        }
        ComplexVector v;
        v.reserve(amps.size());
        for (const Json& z : amps) {
            if (!z.is_array() || z.size() != 2) throw Error(ErrorKind::ParseError, "amplitudes must be [re, im] pairs");
            v.emplace_back(z[0].get<double>(), z[1].get<double>());
        }
        projectors.push_back(StateVector::normalized(basis, std::move(v), tol.normalization));
        labels.push_back(p.contains("label") ? p.at("label").get<std::string>() : std::to_string(labels.size()));
    }
    return ProjectorSet(std::move(basis), std::move(projectors), std::move(labels), tol);
}

Json to_json(const FisherPair& pair) {
    return Json{{"theta", pair.theta},
                {"fim", to_json(pair.fim)},
                {"qfim", to_json(pair.qfim)},
                {"gap", pair.gap},
                {"singular_outcomes", pair.singular_outcomes},
                {"direction_dependent", pair.direction_dependent}};
}

Json to_json(const SaturationReport& report) {
    Json cls = Json::array();
    for (const ProjectorTag& t : report.classification) {
        cls.push_back(Json{{"index", t.index}, {"label", t.label}, {"tag", to_string(t.kind)}, {"overlap", t.overlap}});
    }
    Json t1 = Json::array();
    for (const ConditionResidual& r : report.t1) t1.push_back(residual_json(r));
    Json t2 = Json::array();
    for (const ConditionResidual& r : report.t2) t2.push_back(residual_json(r));
    return Json{{"theta", report.theta},
                {"classification", std::move(cls)},
                {"weak_comm_residual", report.weak_comm_residual},
                {"t1", std::move(t1)},
                {"t2", std::move(t2)},
                {"verdict", to_string(report.verdict)},
                {"gap", report.gap}};
}

SaturationReport saturation_report_from_json(const Json& j) {
    SaturationReport r;
    r.theta = field<std::vector<double>>(j, "theta");
    for (const Json& c : field<Json>(j, "classification")) {
        ProjectorTag t;
        t.index = field<std::size_t>(c, "index");
        t.label = field<std::string>(c, "label");
        t.kind = projector_class_from(field<std::string>(c, "tag"));
        t.overlap = field<double>(c, "overlap");
        r.classification.push_back(std::move(t));
    }
    r.weak_comm_residual = field<double>(j, "weak_comm_residual");
    for (const Json& x : field<Json>(j, "t1")) r.t1.push_back(residual_from(x));
    for (const Json& x : field<Json>(j, "t2")) r.t2.push_back(residual_from(x));
    r.verdict = verdict_from(field<std::string>(j, "verdict"));
    r.gap = field<double>(j, "gap");
    return r;
}

Json to_json(const OptimalMeasurement& m) {
    Json j = to_json(m.set);
    j["in_span"] = m.in_span;
    j["coefficients"] = m.coefficients;
    j["gap"] = m.gap;
    return j;
}

}  // namespace phasesat
