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

#include <cstdint>
#include <vector>

#include "tracebox/boxes.hpp"
#include "tracebox/hilbert.hpp"
#include "tracebox/operators.hpp"

namespace tracebox {

/// One local measurement family, shared by every party: for each setting x
/// the weighted rank-1 elements z_a^x |alpha_a^x><alpha_a^x| (a < r-1) plus
/// the positive remainder completing the POVM. The primal family
/// {identity, weighted elements} is linearly independent by construction.
struct MeasurementFamily {
    Scenario scenario;
    int local_dim = 0;
    std::vector<std::vector<ComplexVector>> vectors;  // [setting][a], a < r-1
    std::vector<std::vector<double>> weights;         // z[setting][a]
    MeasurementModel povms;                           // one copy per party
    std::vector<HermitianOperator> primal;            // identity first, then (x,a)
};

/// Draws the family with d = max(r, m) and uniform weights 1/r, redrawing the
/// Haar vectors until the Gram condition holds (at most 100 attempts, then
/// IndependenceFailure).
MeasurementFamily build_measurements(const Scenario& scenario, std::uint64_t seed);

/// The operator reproducing `box` through the trace rule with the family's
/// measurements: summed over party subsets S, the S-marginal's entries (with
/// every outcome below r-1) weight tensor products placing dual elements on S
/// and the dual identity elsewhere. Requires a nonsignalling box.
HermitianOperator build_operator(const CorrelationBox& box,
                                 const MeasurementFamily& family,
                                 const std::vector<HermitianOperator>& duals);

struct SynthesisModel {
    MeasurementFamily family;
    std::vector<HermitianOperator> duals;  // matches family.primal order
    HermitianOperator op;
    std::uint64_t seed = 0;
};

/// build_measurements + solve_dual + build_operator. The returned model
/// reproduces the input box through evaluate_box within tol::probability.
SynthesisModel synthesize(const CorrelationBox& box, std::uint64_t seed);

/// Largest absolute entry difference between two boxes on one scenario.
double max_entry_difference(const CorrelationBox& a, const CorrelationBox& b);

}  // namespace tracebox
