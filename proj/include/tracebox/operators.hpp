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
#include "tracebox/witness.hpp"

namespace tracebox {

/// Measurement on one local space: positive semidefinite elements summing to
/// the identity (checked at construction: min eigenvalue >= -tol::psd_slack,
/// completeness within tol::duality max-entry).
class Povm {
  public:
    explicit Povm(std::vector<ComplexMatrix> elements);

    int dim() const { return static_cast<int>(elements_.front().rows()); }
    int n_outcomes() const { return static_cast<int>(elements_.size()); }
    const ComplexMatrix& element(int outcome) const { return elements_[outcome]; }
    const std::vector<ComplexMatrix>& elements() const { return elements_; }

  private:
    std::vector<ComplexMatrix> elements_;
};

/// Rank-1 projector POVM from an orthonormal basis (one vector per outcome).
/// Throws NonOrthonormal when pairwise overlaps or norms deviate beyond
/// tol::duality.
Povm projective_from_bases(const std::vector<ComplexVector>& basis);

/// Per-party, per-setting POVMs. Every setting of a party acts on the same
/// local dimension and has the same number of outcomes across the model.
class MeasurementModel {
  public:
    explicit MeasurementModel(std::vector<std::vector<Povm>> per_party);

    int n_parties() const { return static_cast<int>(parties_.size()); }
    int n_settings() const { return static_cast<int>(parties_.front().size()); }
    int n_outcomes() const { return parties_.front().front().n_outcomes(); }
    const Povm& povm(int party, int setting) const { return parties_[party][setting]; }
    const std::vector<int>& local_dims() const { return local_dims_; }

  private:
    std::vector<std::vector<Povm>> parties_;
    std::vector<int> local_dims_;
};

/// Trace-rule output. The box always satisfies normalization; entries can
/// leave [0,1] when the operator is indefinite, in which case
/// valid_probabilities is false and the raw values are kept.
struct EvaluatedBox {
    CorrelationBox box;
    bool valid_probabilities = true;
    double min_entry = 0.0;
    double max_entry = 0.0;
};

/// P(a1..aN|x1..xN) = tr(o . M_{a1}^{x1} x ... x M_{aN}^{xN}).
/// Requires matching local dimensions and unit trace.
EvaluatedBox evaluate_box(const HermitianOperator& o, const MeasurementModel& mm);

struct OperatorClass {
    bool hermitian_unit_trace = false;
    bool positive = false;
    double min_eigenvalue = 0.0;
    double product_min = 0.0;
    WitnessFlag witness_flag = WitnessFlag::Unknown;
};

/// Positions an operator in the hierarchy: unit-trace Hermitian (always true
/// for this type when the trace matches), positive semidefinite, and the
/// heuristic witness tri-state from multi-start product minimization with
/// `samples` restarts.
OperatorClass classify(const HermitianOperator& o, int samples, std::uint64_t seed);

/// The two-qubit operator alpha+ Phi+ + alpha- Phi-, alpha± = (1 ± sqrt 2)/2,
/// reproducing the PR box together with pr_measurements(). Unit trace but
/// indefinite, and not a witness.
HermitianOperator pr_operator();

/// Projective measurements onto the eigenbases of {sigma_x, sigma_y} for the
/// first party and {(sigma_x - sigma_y)/sqrt 2, (sigma_x + sigma_y)/sqrt 2}
/// for the second; outcome 0 is the +1 eigenspace.
MeasurementModel pr_measurements();

/// Full-rank random POVM: r Wishart matrices normalized by the inverse
/// square root of their sum.
Povm random_povm(int dim, int n_outcomes, std::mt19937_64& rng);

/// Independent random POVMs for every party and setting; local dimension
/// `local_dim` uniformly.
MeasurementModel random_measurement_model(const Scenario& scenario, int local_dim,
                                          std::uint64_t seed);

}  // namespace tracebox
