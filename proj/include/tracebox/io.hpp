// Copyright 2026 The tracebox authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "tracebox/boxes.hpp"
#include "tracebox/hilbert.hpp"
#include "tracebox/operators.hpp"
#include "tracebox/synthesis.hpp"

namespace tracebox {

using Json = nlohmann::json;

// Complex numbers serialize as [re, im]; matrices row-major rectangular.

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json operator_to_json(const HermitianOperator& op);
HermitianOperator operator_from_json(const Json& j);

Json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);

Json box_to_json(const CorrelationBox& box);
CorrelationBox box_from_json(const Json& j);

Json measurement_model_to_json(const MeasurementModel& mm);
MeasurementModel measurement_model_from_json(const Json& j);

Json synthesis_model_to_json(const SynthesisModel& model);

/// The subset of a model file evaluate needs: an operator and measurements.
struct EvaluationModel {
    HermitianOperator op;
    MeasurementModel mm;
};

EvaluationModel evaluation_model_from_json(const Json& j);

/// Reads and parses a JSON file; ParseError on unreadable or malformed input.
Json load_json_file(const std::string& path);

}  // namespace tracebox
