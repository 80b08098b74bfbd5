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
#include <span>
#include <vector>

#include "tracebox/errors.hpp"

namespace tracebox {

/// N parties, m settings per party, r outcomes per setting. Uniform across
/// parties.
struct Scenario {
    int n_parties = 0;
    int n_settings = 0;
    int n_outcomes = 0;

    void validate() const;
    long settings_count() const;  // m^N
    long outcomes_count() const;  // r^N
    long size() const { return settings_count() * outcomes_count(); }

    bool operator==(const Scenario&) const = default;
};

/// Mixed-radix helpers for (x1..xN) / (a1..aN) tuples; digit 0 is the most
/// significant (party 1).
long flat_index(std::span<const int> digits, int base);
void unflatten(long index, int base, std::span<int> digits);

/// Joint conditional probability table P(a1..aN | x1..xN), stored flat,
/// settings-major then outcomes-major, both lexicographic 0-based.
///
/// Construction validates normalization (each setting sums to 1 within
/// tol::probability). Entries within `clamp_tol` of [0,1] are clamped into
/// it; farther-out entries are rejected under Strict policy and kept as-is
/// under AllowOutOfRange (the trace rule on an indefinite operator can
/// legitimately produce them).
class CorrelationBox {
  public:
    enum class EntryPolicy { Strict, AllowOutOfRange };

    CorrelationBox(Scenario scenario, std::vector<double> probs,
                   EntryPolicy policy = EntryPolicy::Strict);

    const Scenario& scenario() const { return scenario_; }
    const std::vector<double>& probs() const { return probs_; }

    double at(std::span<const int> settings, std::span<const int> outcomes) const;
    double at_flat(long setting_index, long outcome_index) const;

    /// True when every stored entry lies in [-slack, 1+slack].
    bool entries_in_range(double slack = 0.0) const;

  private:
    Scenario scenario_;
    std::vector<double> probs_;
};

struct NsCheck {
    bool nonsignalling = false;
    double max_violation = 0.0;
};

/// Checks, for each party, each fixed setting tuple of the others and each
/// pair of its own settings, that the marginal over its outcome is unchanged.
NsCheck is_nonsignalling(const CorrelationBox& box);

/// Marginal box on a sorted subset of parties, computed at complement setting
/// all-zeros and cross-checked against complement setting all-(m-1). Throws
/// SignallingInput when the two disagree beyond tol::probability.
CorrelationBox marginal(const CorrelationBox& box, const std::vector<int>& parties);

/// P(a,b|x,y) = 1/2 if xy = a xor b, else 0, on scenario (2,2,2).
CorrelationBox pr_box();

/// Product of per-party deterministic response functions;
/// assignments[party][setting] = outcome.
CorrelationBox deterministic_box(const Scenario& scenario,
                                 const std::vector<std::vector<int>>& assignments);

CorrelationBox uniform_box(const Scenario& scenario);

/// lambda * a + (1 - lambda) * b, entrywise. lambda in [0,1].
CorrelationBox mix(const CorrelationBox& a, const CorrelationBox& b, double lambda);

/// p(000|000) + p(110|011) + p(011|101) + p(101|110); requires scenario
/// (3,2,2).
double bell_beta(const CorrelationBox& box);

/// Exact maximum of bell_beta over the 64 tripartite deterministic boxes.
double classical_max_beta();

struct BellVerdict {
    double beta = 0.0;
    double classical_max = 0.0;
    bool violates_classical = false;
};

BellVerdict bell_verdict(const CorrelationBox& box);

/// Seed-deterministic nonsignalling box with full support: a uniform random
/// tensor is orthogonally projected onto the affine subspace cut out by
/// normalization plus single-party no-signalling equalities, then mixed
/// toward the uniform box with the largest coefficient keeping every entry
/// >= 1e-6.
CorrelationBox random_ns_box(const Scenario& scenario, std::uint64_t seed);

}  // namespace tracebox
