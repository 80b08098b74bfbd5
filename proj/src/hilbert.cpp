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

#include "tracebox/hilbert.hpp"

#include <string>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

namespace tracebox {

HermitianOperator::HermitianOperator(std::vector<int> local_dims, ComplexMatrix matrix)
    : local_dims_(std::move(local_dims)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw DimensionMismatch("operator matrix must be square, got " +
                                std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()));
    }
    if (local_dims_.empty()) {
        throw DimensionMismatch("operator needs at least one local dimension");
    }
    Eigen::Index prod = 1;
    for (int d : local_dims_) {
        if (d < 1) throw DimensionMismatch("local dimensions must be positive");
        prod *= d;
    }
    if (prod != matrix_.rows()) {
        throw DimensionMismatch("matrix side " + std::to_string(matrix_.rows()) +
                                " does not match product of local dims " +
                                std::to_string(prod));
    }
    const double dev = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol::hermiticity) {
        throw Error("matrix is not Hermitian (max deviation " + std::to_string(dev) + ")");
    }
}

HermitianOperator HermitianOperator::identity(std::vector<int> local_dims) {
    Eigen::Index prod = 1;
    for (int d : local_dims) prod *= d;
    return HermitianOperator(std::move(local_dims), ComplexMatrix::Identity(prod, prod));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("hs_inner operands have different total dimension");
    }
    return (a.matrix() * b.matrix()).trace().real();
}

EigResult eig_hermitian(const HermitianOperator& a) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error("eigendecomposition failed to converge");
    }
    return EigResult{solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

Eigen::MatrixXd gram_matrix(const std::vector<HermitianOperator>& basis) {
    const auto k = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd g(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i; j < k; ++j) {
            const double v = hs_inner(basis[i], basis[j]);
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

}  // namespace

double gram_relative_condition(const std::vector<HermitianOperator>& basis) {
    if (basis.empty()) throw DimensionMismatch("empty operator family");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram_matrix(basis));
    const Eigen::VectorXd sv = es.eigenvalues().cwiseAbs();
    const double largest = sv.maxCoeff();
    if (largest == 0.0) return 0.0;
    return sv.minCoeff() / largest;
}

std::vector<HermitianOperator> solve_dual(const std::vector<HermitianOperator>& basis) {
    if (basis.empty()) throw DimensionMismatch("empty operator family");
    const auto& dims = basis.front().local_dims();
    for (const auto& op : basis) {
        if (op.local_dims() != dims) {
            throw DimensionMismatch("dual basis members live on different spaces");
        }
    }
    const Eigen::MatrixXd g = gram_matrix(basis);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    const Eigen::VectorXd sv = es.eigenvalues().cwiseAbs();
    if (sv.minCoeff() < tol::gram_rcond * sv.maxCoeff()) {
        throw GramSingular("Gram matrix singular: relative smallest singular value " +
                           std::to_string(sv.minCoeff() / sv.maxCoeff()));
    }
    const Eigen::MatrixXd ginv =
        es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() *
        es.eigenvectors().transpose();

    const auto k = static_cast<Eigen::Index>(basis.size());
    std::vector<HermitianOperator> duals;
    duals.reserve(basis.size());
    for (Eigen::Index j = 0; j < k; ++j) {
        ComplexMatrix m = ComplexMatrix::Zero(basis.front().dim(), basis.front().dim());
        for (Eigen::Index i = 0; i < k; ++i) {
            m += ginv(j, i) * basis[i].matrix();
        }
        duals.emplace_back(dims, std::move(m));
    }
    return duals;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over seed + stream * odd constant
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::mt19937_64 seeded_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

ComplexVector haar_unit_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector v(dim);
    for (int i = 0; i < dim; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

ComplexMatrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

HermitianOperator random_unit_trace_hermitian(const std::vector<int>& local_dims,
                                              std::uint64_t seed) {
    Eigen::Index d = 1;
    for (int v : local_dims) d *= v;
    auto rng = seeded_rng(seed);
    ComplexMatrix g = gaussian_matrix(static_cast<int>(d), static_cast<int>(d), rng);
    ComplexMatrix h = (g + g.adjoint()) / 2.0;
    // shift the trace instead of rescaling: avoids blowup when tr(h) ~ 0
    h += ((1.0 - h.trace().real()) / static_cast<double>(d)) *
         ComplexMatrix::Identity(d, d);
    return HermitianOperator(local_dims, std::move(h));
}

HermitianOperator random_density_matrix(const std::vector<int>& local_dims,
                                        std::uint64_t seed) {
    Eigen::Index d = 1;
    for (int v : local_dims) d *= v;
    auto rng = seeded_rng(seed);
    ComplexMatrix g = gaussian_matrix(static_cast<int>(d), static_cast<int>(d), rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return HermitianOperator(local_dims, std::move(rho));
}

}  // namespace tracebox
