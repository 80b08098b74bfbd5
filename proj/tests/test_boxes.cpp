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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tracebox/boxes.hpp"
#include "tracebox/synthesis.hpp"

using namespace tracebox;

namespace {

// Party 1 copies party 2's setting: maximally signalling.
CorrelationBox copy_remote_setting_box() {
    const Scenario sc{2, 2, 2};
    std::vector<double> p(sc.size(), 0.0);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            p[(x * 2 + y) * 4 + (y * 2 + 0)] = 1.0;  // a = y, b = 0
        }
    }
    return CorrelationBox(sc, std::move(p));
}

}  // namespace

TEST_CASE("pr_box entries") {
    const auto box = pr_box();
    const int x00[] = {0, 0}, x11[] = {1, 1};
    const int a00[] = {0, 0}, a01[] = {0, 1};
    CHECK(box.at(x00, a00) == 0.5);
    CHECK(box.at(x11, a01) == 0.5);
    CHECK(box.at(x11, a00) == 0.0);
}

TEST_CASE("no-signalling verdicts") {
    const auto check_pr = is_nonsignalling(pr_box());
    CHECK(check_pr.nonsignalling);
    CHECK(check_pr.max_violation < 1e-15);

    const auto check_uniform = is_nonsignalling(uniform_box({2, 2, 2}));
    CHECK(check_uniform.nonsignalling);
    CHECK(check_uniform.max_violation == 0.0);

    const auto check_signalling = is_nonsignalling(copy_remote_setting_box());
    CHECK_FALSE(check_signalling.nonsignalling);
    CHECK(check_signalling.max_violation == doctest::Approx(1.0));
}

TEST_CASE("marginal of the PR box is uniform") {
    const auto m = marginal(pr_box(), {0});
    CHECK(m.scenario() == Scenario{1, 2, 2});
    for (double p : m.probs()) CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("marginal of product and deterministic boxes") {
    const Scenario sc{2, 2, 2};
    const auto det = deterministic_box(sc, {{0, 1}, {1, 1}});
    const auto m = marginal(det, {0});
    const int x0[] = {0}, x1[] = {1}, a0[] = {0}, a1[] = {1};
    CHECK(m.at(x0, a0) == 1.0);
    CHECK(m.at(x1, a1) == 1.0);

    const auto u = marginal(uniform_box({3, 2, 2}), {1});
    for (double p : u.probs()) CHECK(p == doctest::Approx(0.5));
}

TEST_CASE("marginal rejects signalling inputs") {
    CHECK_THROWS_AS(marginal(copy_remote_setting_box(), {0}), SignallingInput);
}

TEST_CASE("marginals compose on random nonsignalling boxes") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const auto box = random_ns_box({3, 2, 2}, seed);
        const auto direct = marginal(box, {0});
        const auto via_pair = marginal(marginal(box, {0, 1}), {0});
        CHECK(max_entry_difference(direct, via_pair) < 1e-9);
    }
}

TEST_CASE("deterministic boxes") {
    const Scenario sc{2, 2, 2};
    const auto ones = deterministic_box(sc, {{1, 1}, {1, 1}});
    const int xs[] = {0, 1}, as[] = {1, 1};
    CHECK(ones.at(xs, as) == 1.0);

    const auto copy = deterministic_box({1, 2, 2}, {{0, 1}});
    const int x0[] = {0}, x1[] = {1}, a0[] = {0}, a1[] = {1};
    CHECK(copy.at(x0, a0) == 1.0);
    CHECK(copy.at(x1, a1) == 1.0);
    CHECK(copy.at(x1, a0) == 0.0);

    const auto zeros = deterministic_box(sc, {{0, 0}, {0, 0}});
    const auto mixed = mix(ones, zeros, 0.5);
    for (std::size_t i = 0; i < mixed.probs().size(); ++i) {
        CHECK(mixed.probs()[i] ==
              doctest::Approx(0.5 * (ones.probs()[i] + zeros.probs()[i])));
    }
}

TEST_CASE("bell_beta on fixed boxes") {
    const Scenario sc{3, 2, 2};
    const auto zeros = deterministic_box(sc, {{0, 0}, {0, 0}, {0, 0}});
    CHECK(bell_beta(zeros) == 1.0);
    CHECK(bell_beta(uniform_box(sc)) == doctest::Approx(0.5));
    CHECK_THROWS_AS(bell_beta(pr_box()), DimensionMismatch);
}

TEST_CASE("bell_beta is linear under mixing") {
    const auto a = random_ns_box({3, 2, 2}, 10);
    const auto b = random_ns_box({3, 2, 2}, 11);
    for (double lam : {0.0, 0.25, 0.7, 1.0}) {
        const double mixed = bell_beta(mix(a, b, lam));
        CHECK(std::abs(mixed - (lam * bell_beta(a) + (1 - lam) * bell_beta(b))) <
              1e-12);
    }
}

TEST_CASE("classical maximum of the Bell functional") {
    CHECK(classical_max_beta() == 1.0);

    // independent oracle: enumerate all 64 deterministic strategies through
    // deterministic_box and bell_beta
    const Scenario sc{3, 2, 2};
    double best = 0.0;
    bool zeros_attains = false;
    for (int s1 = 0; s1 < 4; ++s1) {
        for (int s2 = 0; s2 < 4; ++s2) {
            for (int s3 = 0; s3 < 4; ++s3) {
                const std::vector<std::vector<int>> strat = {
                    {s1 & 1, (s1 >> 1) & 1},
                    {s2 & 1, (s2 >> 1) & 1},
                    {s3 & 1, (s3 >> 1) & 1}};
                const double beta = bell_beta(deterministic_box(sc, strat));
                best = std::max(best, beta);
                // no vertex attains two or more terms
                CHECK(beta <= 1.0);
                if (s1 == 0 && s2 == 0 && s3 == 0 && beta == 1.0) {
                    zeros_attains = true;
                }
            }
        }
    }
    CHECK(best == classical_max_beta());
    CHECK(zeros_attains);
}

TEST_CASE("bell_verdict flags violation only above the classical bound") {
    const Scenario sc{3, 2, 2};
    const auto v = bell_verdict(uniform_box(sc));
    CHECK(v.classical_max == 1.0);
    CHECK_FALSE(v.violates_classical);
}

TEST_CASE("random nonsignalling boxes") {
    for (const Scenario sc :
         {Scenario{2, 2, 2}, Scenario{2, 3, 2}, Scenario{2, 2, 3}, Scenario{3, 2, 2}}) {
        const auto box = random_ns_box(sc, 99);
        const auto check = is_nonsignalling(box);
        CHECK(check.nonsignalling);
        CHECK(check.max_violation < 1e-12);
        for (double p : box.probs()) CHECK(p >= 1e-6 - 1e-12);

        const auto again = random_ns_box(sc, 99);
        CHECK(max_entry_difference(box, again) == 0.0);
        const auto other = random_ns_box(sc, 100);
        CHECK(max_entry_difference(box, other) > 0.0);
    }
}

TEST_CASE("mixing coefficient zero returns the uniform box") {
    const Scenario sc{2, 2, 2};
    const auto box = random_ns_box(sc, 4);
    const auto u = uniform_box(sc);
    CHECK(max_entry_difference(mix(box, u, 0.0), u) == 0.0);
}

TEST_CASE("mixtures of nonsignalling boxes stay nonsignalling") {
    const auto a = random_ns_box({2, 2, 2}, 21);
    const auto b = pr_box();
    const auto mixed = mix(a, b, 0.3);
    CHECK(is_nonsignalling(mixed).nonsignalling);
}

TEST_CASE("box validation") {
    const Scenario sc{1, 1, 2};
    CHECK_THROWS_AS(CorrelationBox(sc, {0.6, 0.5}), Error);       // normalization
    CHECK_THROWS_AS(CorrelationBox(sc, {-0.5, 1.5}), Error);      // range
    CHECK_THROWS_AS(CorrelationBox(sc, {0.5, 0.25, 0.25}), DimensionMismatch);
    const CorrelationBox ok(sc, {1.0 + 5e-11, -5e-11});  // clamped
    CHECK(ok.probs()[0] == 1.0);
    CHECK(ok.probs()[1] == 0.0);
}
