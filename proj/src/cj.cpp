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

#include "tracebox/cj.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace tracebox {

LinearMap::LinearMap(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) throw DimensionMismatch("map needs at least one (L,R) pair");
    const auto& first = pairs_.front().first;
    output_dim_ = static_cast<int>(first.rows());
    input_dim_ = static_cast<int>(first.cols());
    for (const auto& [l, r] : pairs_) {
        if (l.rows() != output_dim_ || l.cols() != input_dim_ ||
            r.rows() != output_dim_ || r.cols() != input_dim_) {
            throw DimensionMismatch("all (L,R) pairs must share one shape");
        }
    }
}

LinearMap LinearMap::identity(int dim) {
    const ComplexMatrix i = ComplexMatrix::Identity(dim, dim);
    return LinearMap({{i, i}});
}

LinearMap LinearMap::transpose(int dim) {
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            ComplexMatrix l = ComplexMatrix::Zero(dim, dim);
            ComplexMatrix r = ComplexMatrix::Zero(dim, dim);
            l(i, j) = 1.0;
            r(j, i) = 1.0;
            pairs.emplace_back(std::move(l), std::move(r));
        }
    }
    return LinearMap(std::move(pairs));
}

LinearMap LinearMap::completely_depolarizing(int dim) {
    // X -> tr(X) 1/d via the normalized matrix units
    std::vector<Pair> pairs;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            ComplexMatrix k = ComplexMatrix::Zero(dim, dim);
            k(i, j) = scale;
            pairs.emplace_back(k, k);
        }
    }
    return LinearMap(std::move(pairs));
}

LinearMap LinearMap::random_cptp(int input_dim, int output_dim, int kraus_count,
                                 std::uint64_t seed) {
    if (input_dim < 1 || output_dim < 1 || kraus_count < 1) {
        throw DimensionMismatch("map dimensions must be positive");
    }
    if (output_dim * kraus_count < input_dim) {
        throw DimensionMismatch("isometry needs output_dim * kraus_count >= input_dim");
    }
    auto rng = seeded_rng(seed);
    const ComplexMatrix g =
        gaussian_matrix(output_dim * kraus_count, input_dim, rng);
    const Eigen::HouseholderQR<ComplexMatrix> qr(g);
    const ComplexMatrix isometry =
        qr.householderQ() * ComplexMatrix::Identity(output_dim * kraus_count, input_dim);
    std::vector<Pair> pairs;
    pairs.reserve(kraus_count);
    for (int k = 0; k < kraus_count; ++k) {
        ComplexMatrix block = isometry.block(k * output_dim, 0, output_dim, input_dim);
        pairs.emplace_back(block, block);
    }
    return LinearMap(std::move(pairs));
}

LinearMap LinearMap::compose(const LinearMap& other) const {
    if (other.output_dim_ != input_dim_) {
        throw DimensionMismatch("composition dimensions do not match");
    }
    std::vector<Pair> pairs;
    pairs.reserve(pairs_.size() * other.pairs_.size());
    for (const auto& [l1, r1] : pairs_) {
        for (const auto& [l2, r2] : other.pairs_) {
            pairs.emplace_back(l1 * l2, r1 * r2);
        }
    }
    return LinearMap(std::move(pairs));
}

bool LinearMap::is_completely_positive() const {
    for (const auto& [l, r] : pairs_) {
        if ((l - r).cwiseAbs().maxCoeff() > 0.0) return false;
    }
    return true;
}

bool LinearMap::is_trace_preserving(double tolerance) const {
    ComplexMatrix sum = ComplexMatrix::Zero(input_dim_, input_dim_);
    for (const auto& [l, r] : pairs_) {
        sum += r.adjoint() * l;
    }
    return (sum - ComplexMatrix::Identity(input_dim_, input_dim_))
               .cwiseAbs()
               .maxCoeff() <= tolerance;
}

ComplexMatrix apply_map(const LinearMap& map, const ComplexMatrix& x) {
    if (x.rows() != map.input_dim() || x.cols() != map.input_dim()) {
        throw DimensionMismatch("map input has wrong shape");
    }
    ComplexMatrix out = ComplexMatrix::Zero(map.output_dim(), map.output_dim());
    for (const auto& [l, r] : map.pairs()) {
        out += l * x * r.adjoint();
    }
    return out;
}

LinearMap dual_map(const LinearMap& map) {
    std::vector<LinearMap::Pair> pairs;
    pairs.reserve(map.pairs().size());
    for (const auto& [l, r] : map.pairs()) {
        pairs.emplace_back(l.adjoint(), r.adjoint());
    }
    return LinearMap(std::move(pairs));
}

HermitianOperator choi(const LinearMap& map) {
    const int din = map.input_dim();
    const int dout = map.output_dim();
    ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(din) * dout,
                                            static_cast<Eigen::Index>(din) * dout);
    for (int i = 0; i < din; ++i) {
        for (int j = 0; j < din; ++j) {
            ComplexMatrix unit = ComplexMatrix::Zero(din, din);
            unit(i, j) = 1.0;
            out.block(i * dout, j * dout, dout, dout) = apply_map(map, unit);
        }
    }
    return HermitianOperator({din, dout}, std::move(out));
}

ComplexMatrix apply_to_second_subsystem(const LinearMap& map, const ComplexMatrix& x,
                                        int dim_first) {
    const int din = map.input_dim();
    const int dout = map.output_dim();
    if (x.rows() != static_cast<Eigen::Index>(dim_first) * din || x.rows() != x.cols()) {
        throw DimensionMismatch("operator shape does not match 1 (x) map input");
    }
    ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim_first) * dout,
                                            static_cast<Eigen::Index>(dim_first) * dout);
    for (int i = 0; i < dim_first; ++i) {
        for (int j = 0; j < dim_first; ++j) {
            out.block(i * dout, j * dout, dout, dout) =
                apply_map(map, x.block(i * din, j * din, din, din));
        }
    }
    return out;
}

GleasonIdentityCheck verify_gleason_identity(const HermitianOperator& psi,
                                             const LinearMap& map,
                                             const MeasurementModel& mm) {
    if (psi.n_parties() != 2 || mm.n_parties() != 2) {
        throw DimensionMismatch("identity check is bipartite");
    }
    if (psi.local_dims()[1] != map.input_dim()) {
        throw DimensionMismatch("second factor of psi must match the map input");
    }
    if (mm.local_dims()[0] != psi.local_dims()[0] ||
        mm.local_dims()[1] != map.output_dim()) {
        throw DimensionMismatch("measurement dims must match (dim_A, map output)");
    }
    if (std::abs(psi.trace() - 1.0) > tol::probability) {
        throw NotUnitTrace("psi must have unit trace");
    }
    const ComplexMatrix purity = psi.matrix() * psi.matrix() - psi.matrix();
    if (purity.cwiseAbs().maxCoeff() > 1e-8) {
        throw Error("psi must be a rank-1 projector");
    }
    if (!map.is_trace_preserving()) {
        throw Error("identity check needs a trace-preserving map");
    }

    const int dim_a = psi.local_dims()[0];
    const ComplexMatrix transported = apply_to_second_subsystem(map, psi.matrix(), dim_a);
    const LinearMap dual = dual_map(map);

    GleasonIdentityCheck check;
    check.dual_povm_min_eigenvalue = std::numeric_limits<double>::infinity();
    for (int x2 = 0; x2 < mm.n_settings(); ++x2) {
        ComplexMatrix completeness =
            ComplexMatrix::Zero(map.input_dim(), map.input_dim());
        for (int a2 = 0; a2 < mm.n_outcomes(); ++a2) {
            const ComplexMatrix dual_effect = apply_map(dual, mm.povm(1, x2).element(a2));
            completeness += dual_effect;
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
                (dual_effect + dual_effect.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
            check.dual_povm_min_eigenvalue =
                std::min(check.dual_povm_min_eigenvalue, es.eigenvalues()(0));
            for (int x1 = 0; x1 < mm.n_settings(); ++x1) {
                for (int a1 = 0; a1 < mm.n_outcomes(); ++a1) {
                    const ComplexMatrix& m1 = mm.povm(0, x1).element(a1);
                    const ComplexMatrix& m2 = mm.povm(1, x2).element(a2);
                    const double lhs =
                        (transported * kron(m1, m2)).trace().real();
                    const double rhs =
                        (psi.matrix() * kron(m1, dual_effect)).trace().real();
                    check.max_discrepancy =
                        std::max(check.max_discrepancy, std::abs(lhs - rhs));
                }
            }
        }
        check.dual_povm_completeness_error = std::max(
            check.dual_povm_completeness_error,
            (completeness - ComplexMatrix::Identity(map.input_dim(), map.input_dim()))
                .cwiseAbs()
                .maxCoeff());
    }
    check.dual_povms_valid =
        check.dual_povm_min_eigenvalue >= -tol::psd_slack &&
        check.dual_povm_completeness_error <= tol::duality;
    return check;
}

HermitianOperator random_pure_state_projector(int dim_a, int dim_b,
                                              std::uint64_t seed) {
    auto rng = seeded_rng(seed);
    const ComplexVector v = haar_unit_vector(dim_a * dim_b, rng);
    return HermitianOperator({dim_a, dim_b}, ComplexMatrix(v * v.adjoint()));
}

}  // namespace tracebox
