// Copyright 2026 The qcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include "qcsim/codec.hpp"
#include "qcsim/distributed.hpp"
#include "qcsim/generators.hpp"
#include "qcsim/harness.hpp"
#include "qcsim/pathsum.hpp"

namespace qcsim::harness {

using nlohmann::json;

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck &c) { return c.pass; });
}

json ValidationReport::to_json() const {
    json rows = json::array();
    for (const auto &c : checks) {
        rows.push_back({{"name", c.name},
                        {"expected", c.expected},
                        {"observed", c.observed},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
    }
    return {{"passed", passed()}, {"checks", rows}};
}

namespace {

class Suite {
   public:
    void check(std::string name, double expected, double observed, double tolerance) {
        const bool pass = std::isfinite(observed) && std::abs(observed - expected) <= tolerance;
        report_.checks.push_back({std::move(name), expected, observed, tolerance, pass});
    }
    /// Runs `body`, turning an exception into a failed row.
    template <class F>
    void guarded(const std::string &name, F &&body) {
        try {
            body();
        } catch (const std::exception &e) {
            report_.checks.push_back({name + " (error: " + e.what() + ")", 0, std::nan(""), 0, false});
        }
    }
    ValidationReport take() {
        return std::move(report_);
    }

   private:
    ValidationReport report_;
};

/// The entry of `values` farthest from `expected`.
double farthest(const std::vector<double> &values, double expected) {
    double worst = expected;
    for (double v : values) {
        if (!(std::abs(v - expected) <= std::abs(worst - expected))) {
            worst = v;
        }
    }
    return worst;
}

void check_report(Suite &suite, const std::string &prefix, const ExpectationReport &report) {
    std::vector<double> xs, ys, zs;
    for (const auto &e : report.qubits) {
        xs.push_back(e.x);
        ys.push_back(e.y);
        zs.push_back(e.z);
    }
    suite.check(prefix + "/Q_x", 0.0, farthest(xs, 0.0), 1e-12);
    suite.check(prefix + "/Q_y", 0.5, farthest(ys, 0.5), 1e-12);
    suite.check(prefix + "/Q_z", 0.5, farthest(zs, 0.5), 1e-12);
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace

ValidationReport validate(std::size_t max_qubits, int threads) {
    if (max_qubits < 2) {
        throw ConfigError("validation needs at least 2 qubits");
    }
    Suite suite;
    const ExecOptions exec{threads, kDefaultMemoryBudget};

    for (std::size_t n : {4, 12, 20}) {
        if (n > max_qubits) {
            continue;
        }
        const Circuit c = gen_uniform_superposition(n);
        const std::string prefix = "uniform_superposition/n=" + std::to_string(n);
        suite.guarded(prefix + "/exact",
                      [&] { check_report(suite, prefix + "/exact", measure_expectations(run_circuit(c, exec), threads)); });
        suite.guarded(prefix + "/adaptive", [&] {
            check_report(suite, prefix + "/adaptive", measure_expectations(run_circuit_encoded(c, exec), threads));
        });
    }

    const double root_half = 1 / std::numbers::sqrt2;
    for (std::size_t n : {2, 8, 16, 24}) {
        if (n > max_qubits) {
            continue;
        }
        const Circuit c = gen_ghz_chain(n);
        const std::string prefix = "ghz/n=" + std::to_string(n);
        suite.guarded(prefix + "/exact", [&] {
            StateVector s = run_circuit(c, exec);
            suite.check(prefix + "/exact/all0", root_half, amplitude(s, Bitstring(n)).real(), 1e-12);
            suite.check(prefix + "/exact/all1", root_half, amplitude(s, Bitstring::all_ones(n)).real(), 1e-12);
        });
        suite.guarded(prefix + "/pathsum", [&] {
            const Circuit cz = rewrite_to_cz_basis(c);
            const PartitionPlan plan = make_partition_plan(cz, default_bisection(n));
            auto amps = compute_amplitudes(cz, plan, CoefficientRequest::parse("all0,all1", n), {1, threads});
            suite.check(prefix + "/pathsum/all0", root_half, amps[0].real(), 1e-10);
            suite.check(prefix + "/pathsum/all1", root_half, amps[1].real(), 1e-10);
        });
    }

    if (max_qubits >= 4) {
        const std::size_t cols = std::min<std::size_t>(5, max_qubits / 2);
        const Circuit c = gen_random_circuit(2, cols, 20, 1);
        const std::size_t n = c.num_qubits();
        const std::string prefix = "random/" + c.name();
        suite.guarded(prefix, [&] {
            const StateVector exact = run_circuit(c, exec);
            suite.check(prefix + "/adaptive_vs_exact", 0, max_abs_error(run_circuit_encoded(c, exec), exact), 5e-3);

            const Circuit cz = rewrite_to_cz_basis(c);
            const PartitionPlan plan = make_partition_plan(cz, default_bisection(n));
            auto amps = compute_amplitudes(cz, plan, CoefficientRequest::first(std::size_t{1} << n, n), {1, threads});
            double worst = 0;
            for (std::size_t i = 0; i < amps.size(); ++i) {
                worst = std::max(worst, std::abs(amps[i] - exact[i]));
            }
            suite.check(prefix + "/pathsum_vs_exact", 0, worst, 1e-10);

            for (int ranks : {1, 2, 4}) {
                DistributedState d = run_circuit_distributed(c, {ranks, threads, kDefaultMemoryBudget});
                suite.check(prefix + "/distributed_r" + std::to_string(ranks) + "_vs_exact", 0,
                            max_abs_diff(gather(d), exact), 1e-12);
            }
        });
    }

    suite.guarded("cz_decomposition", [&] {
        double worst = 0;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                Complex sum = 0;
                for (int s : {1, -1}) {
                    auto d = cz_path_diagonal(s);
                    sum += d[static_cast<std::size_t>(a)] * d[static_cast<std::size_t>(b)];
                }
                worst = std::max(worst, std::abs(0.5 * sum - Complex(a && b ? -1.0 : 1.0)));
            }
        }
        suite.check("cz_decomposition/max_entry_error", 0, worst, 1e-12);
    });

    return suite.take();
}

}  // namespace qcsim::harness
