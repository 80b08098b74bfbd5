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

#include "tracebox/witness.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace tracebox {

namespace {

constexpr double kCycleTol = 1e-12;
constexpr int kMaxCycles = 10000;

// Deterministic phase: the first component of largest magnitude is rotated
// to be real positive.
void fix_phase(ComplexVector& v) {
    int idx = 0;
    double best = std::abs(v(0));
    for (int i = 1; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > best) {
            best = mag;
            idx = i;
        }
    }
    if (best > 0.0) {
        v *= std::conj(v(idx)) / best;
    }
}

ComplexVector product_vector(const ProductState& state) {
    ComplexVector full = ComplexVector::Ones(1);
    for (const auto& v : state.locals) {
        ComplexVector next(full.size() * v.size());
        for (Eigen::Index i = 0; i < full.size(); ++i) {
            for (Eigen::Index j = 0; j < v.size(); ++j) {
                next(i * v.size() + j) = full(i) * v(j);
            }
        }
        full = std::move(next);
    }
    return full;
}

// Contract every party except `party` into a local_dims[party]-dimensional
// Hermitian matrix.
ComplexMatrix contract_all_but(const HermitianOperator& a, const ProductState& state,
                               int party) {
    const auto& dims = a.local_dims();
    ComplexMatrix k = ComplexMatrix::Identity(1, 1);
    for (int j = 0; j < a.n_parties(); ++j) {
        const ComplexMatrix factor =
            j == party ? ComplexMatrix(ComplexMatrix::Identity(dims[j], dims[j]))
                       : ComplexMatrix(state.locals[j]);
        k = kron(k, factor);
    }
    return k.adjoint() * a.matrix() * k;
}

void check_state_matches(const HermitianOperator& a, const ProductState& state) {
    if (static_cast<int>(state.locals.size()) != a.n_parties()) {
        throw DimensionMismatch("product state has wrong party count");
    }
    for (int j = 0; j < a.n_parties(); ++j) {
        if (state.locals[j].size() != a.local_dims()[j]) {
            throw DimensionMismatch("product state factor dimension mismatch");
        }
    }
}

}  // namespace

ProductState::ProductState(std::vector<ComplexVector> vs) : locals(std::move(vs)) {
    for (const auto& v : locals) {
        if (v.size() == 0) throw DimensionMismatch("empty product-state factor");
        if (std::abs(v.norm() - 1.0) > tol::hermiticity) {
            throw Error("product-state factor is not normalized");
        }
    }
}

double product_expectation(const HermitianOperator& a, const ProductState& state) {
    check_state_matches(a, state);
    const ComplexVector full = product_vector(state);
    return (full.adjoint() * a.matrix() * full).value().real();
}

DescentResult alternating_descent(const HermitianOperator& a, ProductState initial,
                                  std::vector<double>* update_trace) {
    check_state_matches(a, initial);
    const int n = a.n_parties();
    if (n < 2) throw DimensionMismatch("product minimization needs >= 2 parties");

    ProductState state = std::move(initial);
    if (update_trace) update_trace->push_back(product_expectation(a, state));

    double cycle_value = product_expectation(a, state);
    bool converged = false;
    int cycles = 0;
    while (cycles < kMaxCycles) {
        ++cycles;
        double value_after = cycle_value;
        for (int party = 0; party < n; ++party) {
            const ComplexMatrix local = contract_all_but(a, state, party);
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(local);
            ComplexVector v = es.eigenvectors().col(0);
            fix_phase(v);
            state.locals[party] = v;
            value_after = es.eigenvalues()(0);
            if (update_trace) update_trace->push_back(value_after);
        }
        if (cycle_value - value_after < kCycleTol) {
            converged = true;
            cycle_value = value_after;
            break;
        }
        cycle_value = value_after;
    }
    return DescentResult{product_expectation(a, state), std::move(state), cycles,
                         converged};
}

MinimizationResult minimize_over_products(const HermitianOperator& a, int restarts,
                                          std::uint64_t seed) {
    if (a.n_parties() < 2) {
        throw DimensionMismatch("product minimization needs >= 2 parties");
    }
    if (restarts < 1) throw RangeViolation("restarts must be >= 1");

    MinimizationResult best;
    best.value = std::numeric_limits<double>::infinity();
    for (int k = 0; k < restarts; ++k) {
        auto rng = seeded_rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
        std::vector<ComplexVector> locals;
        locals.reserve(a.n_parties());
        for (int d : a.local_dims()) locals.push_back(haar_unit_vector(d, rng));
        DescentResult run = alternating_descent(a, ProductState(std::move(locals)));
        if (run.value < best.value) {
            best.value = run.value;
            best.argmin = std::move(run.state);
            best.converged = run.converged;
            best.iterations = run.cycles;
        }
    }
    best.restarts_used = restarts;
    return best;
}

double grid_oracle_3qubit(const HermitianOperator& a, int grid_points) {
    if (a.local_dims() != std::vector<int>{2, 2, 2}) {
        throw DimensionMismatch("grid oracle needs three qubit parties");
    }
    if (grid_points < 2) throw RangeViolation("grid needs at least 2 points");

    const int g = grid_points;
    const long count = static_cast<long>(g) * g;

    // Bloch vectors (cos(t/2), e^{i p} sin(t/2)); first component real, so
    // the pair weights are w00 = c^2, w11 = s^2, w01 = conj(v0) v1 = c s e^{i p}.
    std::vector<double> w00(count), w11(count), w01re(count), w01im(count);
    {
        long idx = 0;
        for (int ti = 0; ti < g; ++ti) {
            const double theta = std::numbers::pi * ti / (g - 1);
            const double c = std::cos(theta / 2.0);
            const double s = std::sin(theta / 2.0);
            for (int pi_ = 0; pi_ < g; ++pi_) {
                const double phi = 2.0 * std::numbers::pi * pi_ / g;
                w00[idx] = c * c;
                w11[idx] = s * s;
                w01re[idx] = c * s * std::cos(phi);
                w01im[idx] = c * s * std::sin(phi);
                ++idx;
            }
        }
    }

    const ComplexMatrix& m = a.matrix();
    const Eigen::Matrix4cd a00 = m.block<4, 4>(0, 0);
    const Eigen::Matrix4cd a01 = m.block<4, 4>(0, 4);
    const Eigen::Matrix4cd a11 = m.block<4, 4>(4, 4);

    double best = std::numeric_limits<double>::infinity();
    for (long i1 = 0; i1 < count; ++i1) {
        const Complex w01(w01re[i1], w01im[i1]);
        const Eigen::Matrix4cd contracted = w00[i1] * a00 + w11[i1] * a11 +
                                            w01 * a01 +
                                            std::conj(w01) * a01.adjoint();
        // party-2/3 blocks of the 4x4; the 4x4 is Hermitian
        const double b00d0 = contracted(0, 0).real();
        const double b00d1 = contracted(1, 1).real();
        const Complex b00od = contracted(0, 1);
        const double b11d0 = contracted(2, 2).real();
        const double b11d1 = contracted(3, 3).real();
        const Complex b11od = contracted(2, 3);
        const Complex e00 = contracted(0, 2);
        const Complex e01 = contracted(0, 3);
        const Complex e10 = contracted(1, 2);
        const Complex e11 = contracted(1, 3);

        for (long i2 = 0; i2 < count; ++i2) {
            const double p = w00[i2];
            const double q = w11[i2];
            const double wr = w01re[i2];
            const double wi = w01im[i2];
            const double c00 =
                p * b00d0 + q * b11d0 + 2.0 * (wr * e00.real() - wi * e00.imag());
            const double c11 =
                p * b00d1 + q * b11d1 + 2.0 * (wr * e11.real() - wi * e11.imag());
            const double c01re = p * b00od.real() + q * b11od.real() +
                                 (wr * e01.real() - wi * e01.imag()) +
                                 (wr * e10.real() - wi * e10.imag());
            const double c01im = p * b00od.imag() + q * b11od.imag() +
                                 (wr * e01.imag() + wi * e01.real()) -
                                 (wr * e10.imag() + wi * e10.real());
            const double mid = 0.5 * (c00 + c11);
            const double gap = 0.5 * (c00 - c11);
            const double lam = mid - std::sqrt(gap * gap + c01re * c01re + c01im * c01im);
            if (lam < best) best = lam;
        }
    }
    return best;
}

WitnessCertificate certify_witness(const HermitianOperator& w, int restarts,
                                   std::uint64_t seed) {
    if (std::abs(w.trace() - 1.0) > tol::probability) {
        throw NotUnitTrace("witness candidate must have unit trace, got " +
                           std::to_string(w.trace()));
    }
    WitnessCertificate cert;
    cert.result = minimize_over_products(w, restarts, seed);
    if (cert.result.value < -tol::witness_violation) {
        cert.flag = WitnessFlag::Violated;
    } else if (!cert.result.converged) {
        cert.flag = WitnessFlag::Unknown;
    } else {
        cert.flag = WitnessFlag::CertifiedNonnegativeOnProducts;
    }
    return cert;
}

}  // namespace tracebox
