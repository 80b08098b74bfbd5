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

#include "tracebox/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace tracebox {

namespace {

constexpr int kMaxDraws = 100;

std::vector<HermitianOperator> primal_family(
    int d, const std::vector<std::vector<ComplexVector>>& vectors,
    const std::vector<std::vector<double>>& weights) {
    std::vector<HermitianOperator> family;
    family.push_back(HermitianOperator::identity({d}));
    for (std::size_t x = 0; x < vectors.size(); ++x) {
        for (std::size_t a = 0; a < vectors[x].size(); ++a) {
            const ComplexVector& v = vectors[x][a];
            family.emplace_back(std::vector<int>{d},
                                ComplexMatrix(weights[x][a] * (v * v.adjoint())));
        }
    }
    return family;
}

}  // namespace

MeasurementFamily build_measurements(const Scenario& scenario, std::uint64_t seed) {
    scenario.validate();
    const int m = scenario.n_settings;
    const int r = scenario.n_outcomes;
    const int d = std::max(r, m);
    const double z = 1.0 / static_cast<double>(r);

    std::vector<std::vector<double>> weights(
        m, std::vector<double>(static_cast<std::size_t>(r - 1), z));

    auto rng = seeded_rng(mix_seed(seed, 0));
    std::vector<std::vector<ComplexVector>> vectors;
    std::vector<HermitianOperator> primal;
    bool independent = false;
    for (int attempt = 0; attempt < kMaxDraws && !independent; ++attempt) {
        vectors.assign(m, {});
        for (int x = 0; x < m; ++x) {
            for (int a = 0; a < r - 1; ++a) {
                vectors[x].push_back(haar_unit_vector(d, rng));
            }
        }
        primal = primal_family(d, vectors, weights);
        independent = gram_relative_condition(primal) >= tol::gram_rcond;
    }
    if (!independent) {
        throw IndependenceFailure("no linearly independent family after " +
                                  std::to_string(kMaxDraws) + " draws");
    }

    std::vector<Povm> settings;
    settings.reserve(m);
    for (int x = 0; x < m; ++x) {
        std::vector<ComplexMatrix> elements;
        ComplexMatrix remainder = ComplexMatrix::Identity(d, d);
        for (int a = 0; a < r - 1; ++a) {
            const ComplexVector& v = vectors[x][a];
            elements.push_back(weights[x][a] * (v * v.adjoint()));
            remainder -= elements.back();
        }
        elements.push_back(std::move(remainder));
        settings.push_back(Povm(std::move(elements)));
    }
    MeasurementModel povms(
        std::vector<std::vector<Povm>>(scenario.n_parties, settings));

    return MeasurementFamily{scenario, d, std::move(vectors), std::move(weights),
                             std::move(povms), std::move(primal)};
}

HermitianOperator build_operator(const CorrelationBox& box,
                                 const MeasurementFamily& family,
                                 const std::vector<HermitianOperator>& duals) {
    const Scenario& sc = box.scenario();
    if (!(sc == family.scenario)) {
        throw DimensionMismatch("box and measurement family scenarios differ");
    }
    if (duals.size() != family.primal.size()) {
        throw DimensionMismatch("dual family size mismatch");
    }
    const NsCheck ns = is_nonsignalling(box);
    if (!ns.nonsignalling) {
        throw SignallingInput("cannot synthesize an operator for a signalling box "
                              "(violation " +
                              std::to_string(ns.max_violation) + ")");
    }

    const int n = sc.n_parties;
    const int m = sc.n_settings;
    const int r = sc.n_outcomes;
    const int d = family.local_dim;
    const int pairs = m * (r - 1);  // (setting, outcome) combinations per party

    Eigen::Index total = 1;
    for (int j = 0; j < n; ++j) total *= d;
    ComplexMatrix op = ComplexMatrix::Zero(total, total);

    std::vector<int> subset;
    std::vector<int> pair(n), xs(n), as(n);
    for (long mask = 0; mask < (1L << n); ++mask) {
        subset.clear();
        for (int j = 0; j < n; ++j) {
            if (mask & (1L << j)) subset.push_back(j);
        }
        const int k = static_cast<int>(subset.size());

        // P_S: the empty subset contributes the constant 1.
        const CorrelationBox* coeffs = nullptr;
        CorrelationBox sub = k == 0 || k == n ? box : marginal(box, subset);
        if (k > 0) coeffs = &sub;

        long combos = 1;
        for (int j = 0; j < k; ++j) combos *= pairs;
        for (long cf = 0; cf < combos; ++cf) {
            long rest = cf;
            for (int j = k - 1; j >= 0; --j) {
                pair[j] = static_cast<int>(rest % pairs);
                rest /= pairs;
            }
            double coeff = 1.0;
            if (coeffs) {
                for (int j = 0; j < k; ++j) {
                    xs[j] = pair[j] / (r - 1);
                    as[j] = pair[j] % (r - 1);
                }
                coeff = coeffs->at(std::span<const int>(xs.data(), k),
                                   std::span<const int>(as.data(), k));
            }
            ComplexMatrix term = ComplexMatrix::Identity(1, 1);
            for (int j = 0, s = 0; j < n; ++j) {
                if (s < k && subset[s] == j) {
                    term = kron(term, duals[1 + pair[s]].matrix());
                    ++s;
                } else {
                    term = kron(term, duals[0].matrix());
                }
            }
            op += coeff * term;
        }
    }
    return HermitianOperator(std::vector<int>(n, d), std::move(op));
}

SynthesisModel synthesize(const CorrelationBox& box, std::uint64_t seed) {
    MeasurementFamily family = build_measurements(box.scenario(), seed);
    std::vector<HermitianOperator> duals = solve_dual(family.primal);
    HermitianOperator op = build_operator(box, family, duals);
    return SynthesisModel{std::move(family), std::move(duals), std::move(op), seed};
}

double max_entry_difference(const CorrelationBox& a, const CorrelationBox& b) {
    if (!(a.scenario() == b.scenario())) {
        throw DimensionMismatch("boxes live on different scenarios");
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < a.probs().size(); ++i) {
        dev = std::max(dev, std::abs(a.probs()[i] - b.probs()[i]));
    }
    return dev;
}

}  // namespace tracebox
