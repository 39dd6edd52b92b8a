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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "phasesat/fisher.hpp"
#include "phasesat/interferometer.hpp"
#include "phasesat/optimal.hpp"
#include "phasesat/saturation.hpp"

namespace phasesat {

using Json = nlohmann::ordered_json;

/// Model description:
///   {"modes": 3, "splitter": "tritter" | [[[re, im], ...], ...],
///    "phase_modes": [0, 1], "probe": [1, 1, 1]}
/// with an optional explicit "recombiner" in the same matrix form.
struct ModelSpec {
    int modes = 0;
    std::string splitter_name;  // "tritter", "quarter", or empty for an explicit matrix
    ComplexMatrix splitter;
    std::vector<std::size_t> phase_modes;
    std::vector<int> probe;
    std::optional<ComplexMatrix> recombiner;

    ModelPtr build(const ModelOptions& options = {}) const;
};

ModelSpec builtin_model_spec(const std::string& name);  // "mzi3" or "mzi4"
ModelSpec model_spec_from_json(const Json& j);           // ParseError on malformed input
Json to_json(const ModelSpec& spec);
/// A builtin name, or a path to a model JSON file.
ModelSpec load_model_spec(const std::string& source);

Json to_json(const ComplexMatrix& m);  // rows of [re, im]
ComplexMatrix complex_matrix_from_json(const Json& j);
Json to_json(const RealSymMatrix& m);  // nested rows

/// {"basis": {"modes", "photons", "states"}, "projectors": [{"label", "amplitudes"}]}
Json to_json(const ProjectorSet& set);
ProjectorSet projector_set_from_json(const Json& j, BasisPtr basis, const Tolerances& tol = {});

Json to_json(const FisherPair& pair);
Json to_json(const SaturationReport& report);
SaturationReport saturation_report_from_json(const Json& j);
Json to_json(const OptimalMeasurement& m);

Json read_json_file(const std::filesystem::path& path);

}  // namespace phasesat
