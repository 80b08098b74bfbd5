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

#include "tracebox/operators.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace tracebox {

namespace {

void check_hermitian(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols() ||
        (m - m.adjoint()).cwiseAbs().maxCoeff() > tol::hermiticity) {
        throw Error(std::string(what) + " must be Hermitian");
    }
}

}  // namespace

Povm::Povm(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw DimensionMismatch("POVM needs at least one element");
    const Eigen::Index d = elements_.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& e : elements_) {
        if (e.rows() != d || e.cols() != d) {
            throw DimensionMismatch("POVM elements must share one square shape");
        }
        check_hermitian(e, "POVM element");
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(e,
                                                        Eigen::EigenvaluesOnly);
        if (es.eigenvalues()(0) < -tol::psd_slack) {
            throw Error("POVM element has negative eigenvalue " +
                        std::to_string(es.eigenvalues()(0)));
        }
        sum += e;
    }
    const double dev =
        (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > tol::duality) {
        throw Error("POVM elements do not sum to identity (deviation " +
                    std::to_string(dev) + ")");
    }
}

Povm projective_from_bases(const std::vector<ComplexVector>& basis) {
    if (basis.empty()) throw DimensionMismatch("empty basis");
    const Eigen::Index d = basis.front().size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].size() != d) throw DimensionMismatch("basis vector size mismatch");
        for (std::size_t j = 0; j <= i; ++j) {
            const Complex overlap = basis[j].adjoint() * basis[i];
            const double target = i == j ? 1.0 : 0.0;
            if (std::abs(overlap - target) > tol::duality) {
                throw NonOrthonormal("basis vectors are not orthonormal");
            }
        }
    }
    std::vector<ComplexMatrix> elements;
    elements.reserve(basis.size());
    for (const auto& v : basis) {
        elements.push_back(v * v.adjoint());
    }
    return Povm(std::move(elements));
}

MeasurementModel::MeasurementModel(std::vector<std::vector<Povm>> per_party)
    : parties_(std::move(per_party)) {
    if (parties_.empty()) throw DimensionMismatch("measurement model needs parties");
    const std::size_t m = parties_.front().size();
    int r = -1;
    for (const auto& settings : parties_) {
        if (settings.empty() || settings.size() != m) {
            throw DimensionMismatch("every party needs the same setting count");
        }
        const int dim = settings.front().dim();
        for (const auto& povm : settings) {
            if (povm.dim() != dim) {
                throw DimensionMismatch("settings of one party act on one dimension");
            }
            if (r == -1) r = povm.n_outcomes();
            if (povm.n_outcomes() != r) {
                throw DimensionMismatch("every POVM needs the same outcome count");
            }
        }
        local_dims_.push_back(dim);
    }
}

EvaluatedBox evaluate_box(const HermitianOperator& o, const MeasurementModel& mm) {
    if (o.local_dims() != mm.local_dims()) {
        throw DimensionMismatch("operator and measurements have different local dims");
    }
    if (std::abs(o.trace() - 1.0) > tol::probability) {
        throw NotUnitTrace("trace rule needs a unit-trace operator, got trace " +
                           std::to_string(o.trace()));
    }
    const int n = mm.n_parties();
    const int m = mm.n_settings();
    const int r = mm.n_outcomes();
    const Scenario sc{n, m, r};

    std::vector<int> xs(n), as(n);
    std::vector<double> probs(sc.size());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (long xf = 0; xf < sc.settings_count(); ++xf) {
        unflatten(xf, m, xs);
        for (long af = 0; af < sc.outcomes_count(); ++af) {
            unflatten(af, r, as);
            ComplexMatrix effect = ComplexMatrix::Identity(1, 1);
            for (int j = 0; j < n; ++j) {
                effect = kron(effect, mm.povm(j, xs[j]).element(as[j]));
            }
            const double p = (o.matrix() * effect).trace().real();
            probs[xf * sc.outcomes_count() + af] = p;
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
    }
    const bool valid = lo >= -tol::probability && hi <= 1.0 + tol::probability;
    CorrelationBox box(sc, std::move(probs),
                       CorrelationBox::EntryPolicy::AllowOutOfRange);
    return EvaluatedBox{std::move(box), valid, lo, hi};
}

OperatorClass classify(const HermitianOperator& o, int samples, std::uint64_t seed) {
    OperatorClass result;
    result.hermitian_unit_trace = std::abs(o.trace() - 1.0) <= tol::probability;

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(o.matrix(), Eigen::EigenvaluesOnly);
    result.min_eigenvalue = es.eigenvalues()(0);
    result.positive = result.min_eigenvalue >= -tol::psd_slack;

    const MinimizationResult min = minimize_over_products(o, samples, seed);
    result.product_min = min.value;
    if (min.value < -tol::witness_violation) {
        result.witness_flag = WitnessFlag::Violated;
    } else if (!min.converged) {
        result.witness_flag = WitnessFlag::Unknown;
    } else {
        result.witness_flag = WitnessFlag::CertifiedNonnegativeOnProducts;
    }
    return result;
}

namespace {

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

// Spectral projectors of a +/-1-spectrum observable.
Povm observable_povm(const ComplexMatrix& obs) {
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    return Povm({(id + obs) / 2.0, (id - obs) / 2.0});
}

}  // namespace

HermitianOperator pr_operator() {
    ComplexVector phi_plus(4), phi_minus(4);
    const double s = 1.0 / std::sqrt(2.0);
    phi_plus << s, 0, 0, s;
    phi_minus << s, 0, 0, -s;
    const double alpha_plus = (1.0 + std::sqrt(2.0)) / 2.0;
    const double alpha_minus = (1.0 - std::sqrt(2.0)) / 2.0;
    ComplexMatrix o = alpha_plus * (phi_plus * phi_plus.adjoint()) +
                      alpha_minus * (phi_minus * phi_minus.adjoint());
    return HermitianOperator({2, 2}, std::move(o));
}

MeasurementModel pr_measurements() {
    const double s = 1.0 / std::sqrt(2.0);
    const ComplexMatrix sx = pauli_x();
    const ComplexMatrix sy = pauli_y();
    std::vector<Povm> alice = {observable_povm(sx), observable_povm(sy)};
    std::vector<Povm> bob = {observable_povm(s * (sx - sy)),
                             observable_povm(s * (sx + sy))};
    return MeasurementModel({alice, bob});
}

Povm random_povm(int dim, int n_outcomes, std::mt19937_64& rng) {
    std::vector<ComplexMatrix> raw;
    raw.reserve(n_outcomes);
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k < n_outcomes; ++k) {
        const ComplexMatrix g = gaussian_matrix(dim, dim, rng);
        raw.push_back(g.adjoint() * g);
        sum += raw.back();
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sum);
    const ComplexMatrix inv_sqrt =
        es.eigenvectors() *
        es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal().toDenseMatrix().cast<Complex>() *
        es.eigenvectors().adjoint();
    std::vector<ComplexMatrix> elements;
    elements.reserve(n_outcomes);
    for (auto& e : raw) {
        ComplexMatrix m = inv_sqrt * e * inv_sqrt;
        // symmetrize away solver roundoff before validation
        elements.push_back((m + m.adjoint()) / 2.0);
    }
    return Povm(std::move(elements));
}

MeasurementModel random_measurement_model(const Scenario& scenario, int local_dim,
                                          std::uint64_t seed) {
    scenario.validate();
    if (local_dim < 1) throw DimensionMismatch("local dimension must be positive");
    auto rng = seeded_rng(seed);
    std::vector<std::vector<Povm>> parties;
    parties.reserve(scenario.n_parties);
    for (int p = 0; p < scenario.n_parties; ++p) {
        std::vector<Povm> settings;
        settings.reserve(scenario.n_settings);
        for (int x = 0; x < scenario.n_settings; ++x) {
            settings.push_back(random_povm(local_dim, scenario.n_outcomes, rng));
        }
        parties.push_back(std::move(settings));
    }
    return MeasurementModel(std::move(parties));
}

}  // namespace tracebox
