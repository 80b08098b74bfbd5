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

#include "tracebox/boxes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "tracebox/hilbert.hpp"

namespace tracebox {

namespace {

long pow_long(int base, int exp) {
    long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

// Strict boxes may carry up to this much roundoff outside [0,1].
constexpr double kStrictSlack = 1e-10;
// Trace-rule outputs are clamped only when this close to [0,1].
constexpr double kClampSlack = 1e-9;

}  // namespace

void Scenario::validate() const {
    if (n_parties < 1 || n_settings < 1 || n_outcomes < 1) {
        throw DimensionMismatch("scenario counts must all be >= 1");
    }
}

long Scenario::settings_count() const { return pow_long(n_settings, n_parties); }
long Scenario::outcomes_count() const { return pow_long(n_outcomes, n_parties); }

long flat_index(std::span<const int> digits, int base) {
    long idx = 0;
    for (int d : digits) idx = idx * base + d;
    return idx;
}

void unflatten(long index, int base, std::span<int> digits) {
    for (auto i = static_cast<long>(digits.size()) - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(index % base);
        index /= base;
    }
}

CorrelationBox::CorrelationBox(Scenario scenario, std::vector<double> probs,
                               EntryPolicy policy)
    : scenario_(scenario), probs_(std::move(probs)) {
    scenario_.validate();
    if (static_cast<long>(probs_.size()) != scenario_.size()) {
        throw DimensionMismatch("probability tensor has " +
                                std::to_string(probs_.size()) + " entries, expected " +
                                std::to_string(scenario_.size()));
    }
    const double slack = policy == EntryPolicy::Strict ? kStrictSlack : kClampSlack;
    for (double& p : probs_) {
        if (p >= -slack && p <= 1.0 + slack) {
            p = std::clamp(p, 0.0, 1.0);
        } else if (policy == EntryPolicy::Strict) {
            throw Error("probability entry " + std::to_string(p) + " outside [0,1]");
        }
    }
    const long nx = scenario_.settings_count();
    const long na = scenario_.outcomes_count();
    for (long x = 0; x < nx; ++x) {
        double sum = 0.0;
        for (long a = 0; a < na; ++a) sum += probs_[x * na + a];
        if (std::abs(sum - 1.0) > tol::probability) {
            throw Error("setting " + std::to_string(x) + " sums to " +
                        std::to_string(sum) + ", expected 1");
        }
    }
}

double CorrelationBox::at(std::span<const int> settings,
                          std::span<const int> outcomes) const {
    if (static_cast<int>(settings.size()) != scenario_.n_parties ||
        static_cast<int>(outcomes.size()) != scenario_.n_parties) {
        throw DimensionMismatch("tuple length does not match party count");
    }
    return at_flat(flat_index(settings, scenario_.n_settings),
                   flat_index(outcomes, scenario_.n_outcomes));
}

double CorrelationBox::at_flat(long setting_index, long outcome_index) const {
    return probs_[setting_index * scenario_.outcomes_count() + outcome_index];
}

bool CorrelationBox::entries_in_range(double slack) const {
    return std::all_of(probs_.begin(), probs_.end(),
                       [slack](double p) { return p >= -slack && p <= 1.0 + slack; });
}

NsCheck is_nonsignalling(const CorrelationBox& box) {
    const Scenario& sc = box.scenario();
    const int n = sc.n_parties;
    const int m = sc.n_settings;
    const int r = sc.n_outcomes;
    const long others_x = pow_long(m, n - 1);
    const long others_a = pow_long(r, n - 1);

    std::vector<int> xo(n - 1), ao(n - 1), xs(n), as(n);
    double worst = 0.0;
    for (int party = 0; party < n; ++party) {
        for (long xof = 0; xof < others_x; ++xof) {
            unflatten(xof, m, xo);
            for (long aof = 0; aof < others_a; ++aof) {
                unflatten(aof, r, ao);
                double lo = std::numeric_limits<double>::infinity();
                double hi = -lo;
                for (int xi = 0; xi < m; ++xi) {
                    for (int j = 0, k = 0; j < n; ++j) {
                        xs[j] = j == party ? xi : xo[k++];
                    }
                    double s = 0.0;
                    for (int ai = 0; ai < r; ++ai) {
                        for (int j = 0, k = 0; j < n; ++j) {
                            as[j] = j == party ? ai : ao[k++];
                        }
                        s += box.at(xs, as);
                    }
                    lo = std::min(lo, s);
                    hi = std::max(hi, s);
                }
                worst = std::max(worst, hi - lo);
            }
        }
    }
    return NsCheck{worst < tol::probability, worst};
}

namespace {

// Marginal over `parties` with the complement pinned at setting `fill`.
std::vector<double> marginal_at(const CorrelationBox& box,
                                const std::vector<int>& parties, int fill) {
    const Scenario& sc = box.scenario();
    const int n = sc.n_parties;
    const int m = sc.n_settings;
    const int r = sc.n_outcomes;
    const int k = static_cast<int>(parties.size());

    std::vector<int> comp;
    for (int j = 0, p = 0; j < n; ++j) {
        if (p < k && parties[p] == j) {
            ++p;
        } else {
            comp.push_back(j);
        }
    }

    const long sub_x = pow_long(m, k);
    const long sub_a = pow_long(r, k);
    const long comp_a = pow_long(r, static_cast<int>(comp.size()));

    std::vector<int> xsub(k), asub(k), acomp(comp.size()), xs(n), as(n);
    std::vector<double> out(sub_x * sub_a, 0.0);
    for (long xf = 0; xf < sub_x; ++xf) {
        unflatten(xf, m, xsub);
        for (int j = 0; j < k; ++j) xs[parties[j]] = xsub[j];
        for (int c : comp) xs[c] = fill;
        for (long af = 0; af < sub_a; ++af) {
            unflatten(af, r, asub);
            for (int j = 0; j < k; ++j) as[parties[j]] = asub[j];
            double sum = 0.0;
            for (long cf = 0; cf < comp_a; ++cf) {
                unflatten(cf, r, acomp);
                for (std::size_t j = 0; j < comp.size(); ++j) as[comp[j]] = acomp[j];
                sum += box.at(xs, as);
            }
            out[xf * sub_a + af] = sum;
        }
    }
    return out;
}

}  // namespace

CorrelationBox marginal(const CorrelationBox& box, const std::vector<int>& parties) {
    const Scenario& sc = box.scenario();
    if (parties.empty()) throw DimensionMismatch("marginal needs at least one party");
    for (std::size_t j = 0; j < parties.size(); ++j) {
        if (parties[j] < 0 || parties[j] >= sc.n_parties) {
            throw DimensionMismatch("party index out of range");
        }
        if (j > 0 && parties[j] <= parties[j - 1]) {
            throw DimensionMismatch("party subset must be sorted and unique");
        }
    }

    std::vector<double> at_zero = marginal_at(box, parties, 0);
    const bool has_complement = static_cast<int>(parties.size()) < sc.n_parties;
    if (has_complement && sc.n_settings > 1) {
        const std::vector<double> at_last = marginal_at(box, parties, sc.n_settings - 1);
        double dev = 0.0;
        for (std::size_t i = 0; i < at_zero.size(); ++i) {
            dev = std::max(dev, std::abs(at_zero[i] - at_last[i]));
        }
        if (dev > tol::probability) {
            throw SignallingInput("marginal depends on complement settings (deviation " +
                                  std::to_string(dev) + ")");
        }
    }
    Scenario sub{static_cast<int>(parties.size()), sc.n_settings, sc.n_outcomes};
    return CorrelationBox(sub, std::move(at_zero),
                          CorrelationBox::EntryPolicy::AllowOutOfRange);
}

CorrelationBox pr_box() {
    const Scenario sc{2, 2, 2};
    std::vector<double> p(sc.size(), 0.0);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    if ((x & y) == (a ^ b)) {
                        p[(x * 2 + y) * 4 + (a * 2 + b)] = 0.5;
                    }
                }
            }
        }
    }
    return CorrelationBox(sc, std::move(p));
}

CorrelationBox deterministic_box(const Scenario& scenario,
                                 const std::vector<std::vector<int>>& assignments) {
    scenario.validate();
    if (static_cast<int>(assignments.size()) != scenario.n_parties) {
        throw DimensionMismatch("need one assignment per party");
    }
    for (const auto& a : assignments) {
        if (static_cast<int>(a.size()) != scenario.n_settings) {
            throw DimensionMismatch("assignment must cover every setting");
        }
        for (int o : a) {
            if (o < 0 || o >= scenario.n_outcomes) {
                throw DimensionMismatch("assignment outcome out of range");
            }
        }
    }
    const int n = scenario.n_parties;
    const long nx = scenario.settings_count();
    const long na = scenario.outcomes_count();
    std::vector<int> xs(n), as(n);
    std::vector<double> p(scenario.size(), 0.0);
    for (long xf = 0; xf < nx; ++xf) {
        unflatten(xf, scenario.n_settings, xs);
        for (int j = 0; j < n; ++j) as[j] = assignments[j][xs[j]];
        p[xf * na + flat_index(as, scenario.n_outcomes)] = 1.0;
    }
    return CorrelationBox(scenario, std::move(p));
}

CorrelationBox uniform_box(const Scenario& scenario) {
    scenario.validate();
    return CorrelationBox(
        scenario,
        std::vector<double>(scenario.size(), 1.0 / static_cast<double>(
                                                       scenario.outcomes_count())));
}

CorrelationBox mix(const CorrelationBox& a, const CorrelationBox& b, double lambda) {
    if (!(a.scenario() == b.scenario())) {
        throw DimensionMismatch("mixing boxes from different scenarios");
    }
    if (lambda < 0.0 || lambda > 1.0) {
        throw RangeViolation("mixing coefficient must lie in [0,1]");
    }
    std::vector<double> p(a.probs().size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = lambda * a.probs()[i] + (1.0 - lambda) * b.probs()[i];
    }
    return CorrelationBox(a.scenario(), std::move(p),
                          CorrelationBox::EntryPolicy::AllowOutOfRange);
}

namespace {

struct BellTerm {
    int x[3];
    int a[3];
};

// p(000|000) + p(110|011) + p(011|101) + p(101|110)
constexpr BellTerm kBellTerms[4] = {
    {{0, 0, 0}, {0, 0, 0}},
    {{0, 1, 1}, {1, 1, 0}},
    {{1, 0, 1}, {0, 1, 1}},
    {{1, 1, 0}, {1, 0, 1}},
};

}  // namespace

double bell_beta(const CorrelationBox& box) {
    if (!(box.scenario() == Scenario{3, 2, 2})) {
        throw DimensionMismatch("Bell functional needs scenario (3,2,2)");
    }
    double beta = 0.0;
    for (const BellTerm& t : kBellTerms) {
        beta += box.at(t.x, t.a);
    }
    return beta;
}

double classical_max_beta() {
    // Each party's strategy is a function {0,1} -> {0,1}, encoded in two bits.
    int best = 0;
    for (int s1 = 0; s1 < 4; ++s1) {
        for (int s2 = 0; s2 < 4; ++s2) {
            for (int s3 = 0; s3 < 4; ++s3) {
                const int s[3] = {s1, s2, s3};
                int hits = 0;
                for (const BellTerm& t : kBellTerms) {
                    bool ok = true;
                    for (int j = 0; j < 3; ++j) {
                        ok = ok && (((s[j] >> t.x[j]) & 1) == t.a[j]);
                    }
                    hits += ok ? 1 : 0;
                }
                best = std::max(best, hits);
            }
        }
    }
    return static_cast<double>(best);
}

BellVerdict bell_verdict(const CorrelationBox& box) {
    BellVerdict v;
    v.beta = bell_beta(box);
    v.classical_max = classical_max_beta();
    v.violates_classical = v.beta > v.classical_max + tol::probability;
    return v;
}

CorrelationBox random_ns_box(const Scenario& scenario, std::uint64_t seed) {
    scenario.validate();
    const int n = scenario.n_parties;
    const int m = scenario.n_settings;
    const int r = scenario.n_outcomes;
    const long na = scenario.outcomes_count();
    const long size = scenario.size();

    auto rng = seeded_rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    Eigen::VectorXd t(size);
    for (long i = 0; i < size; ++i) t(i) = uni(rng);

    // Equality system C p = d: one normalization row per setting tuple plus,
    // per party, the marginal-equality rows tying each of its settings to
    // setting 0.
    const long norm_rows = scenario.settings_count();
    const long ns_rows = static_cast<long>(n) * pow_long(m, n - 1) *
                         pow_long(r, n - 1) * (m - 1);
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(norm_rows + ns_rows, size);
    Eigen::VectorXd d = Eigen::VectorXd::Zero(norm_rows + ns_rows);
    for (long xf = 0; xf < norm_rows; ++xf) {
        for (long af = 0; af < na; ++af) c(xf, xf * na + af) = 1.0;
        d(xf) = 1.0;
    }
    long row = norm_rows;
    std::vector<int> xo(n - 1), ao(n - 1), xs(n), as(n);
    for (int party = 0; party < n; ++party) {
        for (long xof = 0; xof < pow_long(m, n - 1); ++xof) {
            unflatten(xof, m, xo);
            for (long aof = 0; aof < pow_long(r, n - 1); ++aof) {
                unflatten(aof, r, ao);
                for (int xi = 1; xi < m; ++xi) {
                    for (int sign = 0; sign < 2; ++sign) {
                        const int setting = sign == 0 ? xi : 0;
                        for (int j = 0, k = 0; j < n; ++j) {
                            xs[j] = j == party ? setting : xo[k++];
                        }
                        for (int ai = 0; ai < r; ++ai) {
                            for (int j = 0, k = 0; j < n; ++j) {
                                as[j] = j == party ? ai : ao[k++];
                            }
                            c(row, flat_index(xs, m) * na + flat_index(as, r)) +=
                                sign == 0 ? 1.0 : -1.0;
                        }
                    }
                    ++row;
                }
            }
        }
    }

    // Minimum-norm correction onto the affine subspace; the system is
    // consistent (the uniform box satisfies it), so this is the orthogonal
    // projection.
    const Eigen::VectorXd residual = c * t - d;
    const Eigen::VectorXd correction =
        c.completeOrthogonalDecomposition().solve(residual);
    t -= correction;
    if ((c * t - d).cwiseAbs().maxCoeff() > 1e-11) {
        throw Error("no-signalling projection failed to converge");
    }

    const double u = 1.0 / static_cast<double>(na);
    const double floor = 1e-6;
    double lambda = 1.0;
    for (long i = 0; i < size; ++i) {
        if (t(i) < floor) {
            lambda = std::min(lambda, (u - floor) / (u - t(i)));
        }
    }
    std::vector<double> p(size);
    for (long i = 0; i < size; ++i) {
        p[i] = lambda * t(i) + (1.0 - lambda) * u;
    }
    return CorrelationBox(scenario, std::move(p));
}

}  // namespace tracebox
