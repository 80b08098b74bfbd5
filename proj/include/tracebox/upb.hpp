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

#include <array>
#include <cstdint>

#include "tracebox/boxes.hpp"
#include "tracebox/hilbert.hpp"
#include "tracebox/operators.hpp"

namespace tracebox {

/// |e> = cos(theta)|0> + sin(theta)|1>.
Eigen::Vector2cd e_from_theta(double theta);

/// The default basis parameter (|0> - |1>)/sqrt(2).
Eigen::Vector2cd default_e_vector();

struct UpbConstruction {
    std::array<ComplexVector, 4> states;  // |000>, |1 e~ e>, |e 1 e~>, |e~ e 1>
    HermitianOperator pi_upb;             // rank-4 projector onto their span
    HermitianOperator rho_upb;            // (1 - Pi)/4
};

/// Builds the three-qubit unextendible product basis for the given |e>.
/// Throws DegenerateBasis when |e> is (numerically) computational.
UpbConstruction build_upb(const Eigen::Vector2cd& e);

/// min over product states of <abc|Pi|abc>; positive exactly because the
/// basis is unextendible. Throws RangeViolation outside (0, 1/2).
double compute_epsilon(const HermitianOperator& pi_upb, int restarts,
                       std::uint64_t seed);

/// W' = (Pi - eps)/(4 - 8 eps); unit trace by construction.
HermitianOperator build_witness(const HermitianOperator& pi_upb, double epsilon);

/// Per party: setting 0 measures the computational basis (outcome 0 -> |0>),
/// setting 1 the {|e>, |e~>} basis (outcome 0 -> |e>). Under this assignment
/// the four Bell terms are exactly the four UPB projectors.
MeasurementModel upb_measurements(const Eigen::Vector2cd& e);

/// (1 - eps)/(1 - 2 eps); requires eps in (0, 1/2).
double beta_formula(double epsilon);

struct UpbModel {
    Eigen::Vector2cd e_vector;
    std::array<ComplexVector, 4> upb_states;
    HermitianOperator pi_upb;
    HermitianOperator rho_upb;
    double epsilon = 0.0;
    HermitianOperator w_prime;
    double beta = 0.0;  // Bell value of the Gleason box, evaluated directly
};

UpbModel build_upb_model(const Eigen::Vector2cd& e, int restarts, std::uint64_t seed);

/// The correlations of W' under the UPB-aligned projective measurements.
/// Throws RangeViolation if any entry leaves [-tol, 1+tol] (which would
/// signal a failed epsilon minimization upstream).
CorrelationBox gleason_box(const UpbModel& model);

}  // namespace tracebox
