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

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "tracebox/errors.hpp"

namespace tracebox {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

namespace tol {
/// Structural matrix checks (Hermiticity, unit norm, orthonormality).
inline constexpr double hermiticity = 1e-12;
/// Duality and eigendecomposition reconstruction contracts.
inline constexpr double duality = 1e-10;
/// Relative smallest-singular-value cutoff for Gram matrices.
inline constexpr double gram_rcond = 1e-10;
/// Probability-level checks (normalization, no-signalling, unit trace).
inline constexpr double probability = 1e-9;
/// Slack on smallest eigenvalues in positive-semidefiniteness checks.
inline constexpr double psd_slack = 1e-10;
/// Threshold below which a product-state minimum counts as a violation.
inline constexpr double witness_violation = 1e-8;
}  // namespace tol

/// Hermitian matrix on a tensor product of local spaces. local_dims records
/// the factorization used by measurement and product-state operations; the
/// matrix is checked against its adjoint at construction (max-entry deviation
/// <= tol::hermiticity) and its side must equal the product of local_dims.
class HermitianOperator {
  public:
    HermitianOperator(std::vector<int> local_dims, ComplexMatrix matrix);

    static HermitianOperator identity(std::vector<int> local_dims);

    const std::vector<int>& local_dims() const { return local_dims_; }
    const ComplexMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    int n_parties() const { return static_cast<int>(local_dims_.size()); }
    double trace() const { return matrix_.trace().real(); }

  private:
    std::vector<int> local_dims_;
    ComplexMatrix matrix_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(a b), real for Hermitian operands. Throws DimensionMismatch.
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

struct EigResult {
    Eigen::VectorXd values;  // ascending
    ComplexMatrix vectors;   // orthonormal columns, vectors.col(i) <-> values(i)
};

EigResult eig_hermitian(const HermitianOperator& a);

/// Dual set {M~_j} with tr(M_i M~_j) = delta_ij, computed inside the real
/// span of the inputs by Gram-matrix inversion. Throws GramSingular when the
/// smallest singular value of G_ij = tr(M_i M_j) is below tol::gram_rcond
/// times the largest.
std::vector<HermitianOperator> solve_dual(const std::vector<HermitianOperator>& basis);

/// Relative smallest singular value of the Gram matrix of a family;
/// the family is linearly independent at working precision when this is
/// >= tol::gram_rcond.
double gram_relative_condition(const std::vector<HermitianOperator>& basis);

// Seeded samplers. All draws are deterministic functions of the seed; a
// derived stream seed is produced with mix_seed so that independent
// substreams never alias.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);
std::mt19937_64 seeded_rng(std::uint64_t seed);
ComplexVector haar_unit_vector(int dim, std::mt19937_64& rng);
ComplexMatrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng);
HermitianOperator random_unit_trace_hermitian(const std::vector<int>& local_dims,
                                              std::uint64_t seed);
HermitianOperator random_density_matrix(const std::vector<int>& local_dims,
                                        std::uint64_t seed);

}  // namespace tracebox
