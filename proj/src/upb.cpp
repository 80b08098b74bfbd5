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

#include "tracebox/upb.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "tracebox/witness.hpp"

namespace tracebox {

namespace {

void check_e_vector(const Eigen::Vector2cd& e) {
    if (std::abs(e.norm() - 1.0) > tol::hermiticity) {
        throw Error("|e> must be a unit vector");
    }
    const double a0 = std::abs(e(0));
    const double a1 = std::abs(e(1));
    if (a0 <= 1e-6 || a0 >= 1.0 - 1e-6 || a1 <= 1e-6 || a1 >= 1.0 - 1e-6) {
        throw DegenerateBasis("|e> must differ from the computational basis");
    }
}

Eigen::Vector2cd perp_of(const Eigen::Vector2cd& e) {
    Eigen::Vector2cd p(-std::conj(e(1)), std::conj(e(0)));
    // phase convention: first nonzero component real positive
    const int idx = std::abs(p(0)) > 1e-12 ? 0 : 1;
    p *= std::conj(p(idx)) / std::abs(p(idx));
    return p;
}

ComplexVector kron3(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b,
                    const Eigen::Vector2cd& c) {
    ComplexVector out(8);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                out(4 * i + 2 * j + k) = a(i) * b(j) * c(k);
            }
        }
    }
    return out;
}

void check_epsilon_range(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw RangeViolation("epsilon " + std::to_string(epsilon) +
                             " outside (0, 1/2)");
    }
}

}  // namespace

Eigen::Vector2cd e_from_theta(double theta) {
    return Eigen::Vector2cd(std::cos(theta), std::sin(theta));
}

Eigen::Vector2cd default_e_vector() {
    const double s = 1.0 / std::sqrt(2.0);
    return Eigen::Vector2cd(s, -s);
}

UpbConstruction build_upb(const Eigen::Vector2cd& e) {
    check_e_vector(e);
    const Eigen::Vector2cd ep = perp_of(e);
    const Eigen::Vector2cd k0(1.0, 0.0);
    const Eigen::Vector2cd k1(0.0, 1.0);

    std::array<ComplexVector, 4> states = {
        kron3(k0, k0, k0),
        kron3(k1, ep, e),
        kron3(e, k1, ep),
        kron3(ep, e, k1),
    };
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < i; ++j) {
            if (std::abs((states[j].adjoint() * states[i]).value()) > tol::hermiticity) {
                throw Error("UPB states failed pairwise orthogonality");
            }
        }
    }

    ComplexMatrix pi = ComplexMatrix::Zero(8, 8);
    for (const auto& s : states) pi += s * s.adjoint();
    HermitianOperator pi_op({2, 2, 2}, pi);
    HermitianOperator rho({2, 2, 2}, (ComplexMatrix::Identity(8, 8) - pi) / 4.0);
    return UpbConstruction{std::move(states), std::move(pi_op), std::move(rho)};
}

double compute_epsilon(const HermitianOperator& pi_upb, int restarts,
                       std::uint64_t seed) {
    const MinimizationResult res = minimize_over_products(pi_upb, restarts, seed);
    check_epsilon_range(res.value);
    return res.value;
}

HermitianOperator build_witness(const HermitianOperator& pi_upb, double epsilon) {
    check_epsilon_range(epsilon);
    const Eigen::Index d = pi_upb.dim();
    ComplexMatrix w =
        (pi_upb.matrix() - epsilon * ComplexMatrix::Identity(d, d)) /
        (4.0 - 8.0 * epsilon);
    return HermitianOperator(pi_upb.local_dims(), std::move(w));
}

MeasurementModel upb_measurements(const Eigen::Vector2cd& e) {
    check_e_vector(e);
    const Eigen::Vector2cd ep = perp_of(e);
    const ComplexVector k0 = Eigen::Vector2cd(1.0, 0.0);
    const ComplexVector k1 = Eigen::Vector2cd(0.0, 1.0);

    std::vector<Povm> settings;
    settings.push_back(projective_from_bases({k0, k1}));
    settings.push_back(projective_from_bases({ComplexVector(e), ComplexVector(ep)}));
    return MeasurementModel(std::vector<std::vector<Povm>>(3, settings));
}

double beta_formula(double epsilon) {
    check_epsilon_range(epsilon);
    return (1.0 - epsilon) / (1.0 - 2.0 * epsilon);
}

UpbModel build_upb_model(const Eigen::Vector2cd& e, int restarts, std::uint64_t seed) {
    UpbConstruction upb = build_upb(e);
    const double epsilon = compute_epsilon(upb.pi_upb, restarts, seed);
    HermitianOperator w_prime = build_witness(upb.pi_upb, epsilon);

    UpbModel model{e,       std::move(upb.states), std::move(upb.pi_upb),
                   std::move(upb.rho_upb), epsilon, std::move(w_prime), 0.0};
    model.beta = bell_beta(gleason_box(model));
    return model;
}

CorrelationBox gleason_box(const UpbModel& model) {
    const EvaluatedBox out =
        evaluate_box(model.w_prime, upb_measurements(model.e_vector));
    if (!out.valid_probabilities) {
        throw RangeViolation(
            "witness produced out-of-range probabilities; epsilon is too large");
    }
    return out.box;
}

}  // namespace tracebox
