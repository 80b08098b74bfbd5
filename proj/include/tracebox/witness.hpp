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

#include "tracebox/hilbert.hpp"

namespace tracebox {

/// One unit vector per party, matching the operator's local_dims.
struct ProductState {
    std::vector<ComplexVector> locals;

    ProductState() = default;
    explicit ProductState(std::vector<ComplexVector> vs);
};

/// <prod| a |prod> for the given product state.
double product_expectation(const HermitianOperator& a, const ProductState& state);

struct MinimizationResult {
    double value = 0.0;
    ProductState argmin;
    int restarts_used = 0;
    bool converged = false;
    int iterations = 0;  // cycles spent by the restart that won
};

struct DescentResult {
    double value = 0.0;
    ProductState state;
    int cycles = 0;
    bool converged = false;
};

/// One pass of alternating minimum-eigenvector descent from a given product
/// state: cycling over parties, each update contracts the other parties into
/// a local Hermitian matrix and replaces the party's vector by its minimum
/// eigenvector, so the objective never increases. Stops when a full cycle
/// improves by less than 1e-12 or after 10000 cycles. When update_trace is
/// given it receives the objective value before any update and after every
/// single-party update.
DescentResult alternating_descent(const HermitianOperator& a, ProductState initial,
                                  std::vector<double>* update_trace = nullptr);

/// min over product states of <prod| a |prod>, best of `restarts` descents
/// from Haar-random initial states. Each restart is deterministic in
/// (seed, restart index). Requires at least 2 parties.
MinimizationResult minimize_over_products(const HermitianOperator& a, int restarts,
                                          std::uint64_t seed);

/// Independent minimum for 3-qubit operators: scans Bloch angles of parties
/// 1 and 2 on a grid_points x grid_points grid each (theta in [0,pi]
/// inclusive, phi in [0,2pi) ), with the exact minimum eigenvalue over party
/// 3. An upper bound on the true minimum.
double grid_oracle_3qubit(const HermitianOperator& a, int grid_points);

enum class WitnessFlag {
    CertifiedNonnegativeOnProducts,  // heuristic certificate
    Violated,                        // rigorous: a product state goes negative
    Unknown,                         // optimizer hit the cycle cap
};

struct WitnessCertificate {
    WitnessFlag flag = WitnessFlag::Unknown;
    MinimizationResult result;
};

/// Requires unit trace within tol::probability.
WitnessCertificate certify_witness(const HermitianOperator& w, int restarts,
                                   std::uint64_t seed);

}  // namespace tracebox
