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
#include <utility>
#include <vector>

#include "tracebox/hilbert.hpp"
#include "tracebox/operators.hpp"

namespace tracebox {

/// Linear map X -> sum_k L_k X R_k^dagger, stored as (L, R) operator pairs.
/// Completely positive maps have R_k = L_k; the transpose and compositions
/// with it cover the positive-but-not-CP maps the identity tests need.
class LinearMap {
  public:
    using Pair = std::pair<ComplexMatrix, ComplexMatrix>;

    explicit LinearMap(std::vector<Pair> pairs);

    static LinearMap identity(int dim);
    static LinearMap transpose(int dim);
    static LinearMap completely_depolarizing(int dim);
    /// Random CPTP map from a Haar-ish isometry split into Kraus blocks.
    static LinearMap random_cptp(int input_dim, int output_dim, int kraus_count,
                                 std::uint64_t seed);

    /// this(other(X)).
    LinearMap compose(const LinearMap& other) const;

    int input_dim() const { return input_dim_; }
    int output_dim() const { return output_dim_; }
    const std::vector<Pair>& pairs() const { return pairs_; }

    bool is_completely_positive() const;
    bool is_trace_preserving(double tolerance = tol::duality) const;

  private:
    std::vector<Pair> pairs_;
    int input_dim_ = 0;
    int output_dim_ = 0;
};

ComplexMatrix apply_map(const LinearMap& map, const ComplexMatrix& x);

/// Hilbert-Schmidt adjoint X -> sum_k L_k^dagger X R_k; unital whenever the
/// map is trace-preserving.
LinearMap dual_map(const LinearMap& map);

/// (1 (x) map) applied to the unnormalized maximally entangled projector
/// sum_ij |ii><jj|. Lives on input (x) output with those local dims.
HermitianOperator choi(const LinearMap& map);

/// (1 (x) map) applied to an operator on dim_first (x) input_dim.
ComplexMatrix apply_to_second_subsystem(const LinearMap& map, const ComplexMatrix& x,
                                        int dim_first);

struct GleasonIdentityCheck {
    double max_discrepancy = 0.0;
    /// Validity of the dual-transported POVMs {map*(M_a^x)}: smallest element
    /// eigenvalue across settings and max-entry completeness deviation.
    double dual_povm_min_eigenvalue = 0.0;
    double dual_povm_completeness_error = 0.0;
    bool dual_povms_valid = false;
};

/// Compares tr((1 (x) map)(psi) . M1 (x) M2) against
/// tr(psi . M1 (x) map*(M2)) over every setting and outcome pair. psi must be
/// a rank-1 unit-trace projector and the map trace-preserving; mm is a
/// bipartite model whose second party matches the map's output space.
GleasonIdentityCheck verify_gleason_identity(const HermitianOperator& psi,
                                             const LinearMap& map,
                                             const MeasurementModel& mm);

/// Haar-random bipartite pure-state projector with the given local dims.
HermitianOperator random_pure_state_projector(int dim_a, int dim_b,
                                              std::uint64_t seed);

}  // namespace tracebox
