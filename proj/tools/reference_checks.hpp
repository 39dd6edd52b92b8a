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

#include <functional>
#include <string>
#include <vector>

namespace phasesat::cli {

struct CheckOutcome {
    std::string expected;
    std::string computed;
    double tolerance = 0.0;
    bool pass = false;
};

struct ReferenceCheck {
    std::string id;
    std::string title;
    std::function<CheckOutcome()> run;
};

const std::vector<ReferenceCheck>& reference_checks();

}  // namespace phasesat::cli
