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

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qcsim/harness.hpp"
#include "qcsim/parser.hpp"

namespace {

using namespace qcsim;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

std::string csv_text(const std::vector<harness::BenchRecord> &rows) {
    std::string text = harness::csv_header() + '\n';
    for (const auto &r : rows) {
        text += harness::to_csv(r) + '\n';
    }
    return text;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qcsim: state-vector, compressed and path-sum quantum circuit simulation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qcsim 1.0.0");

    std::string backend_name = "exact";
    const std::vector<std::string> backends{"exact", "adaptive", "pathsum"};
    std::uint64_t mem_budget = kDefaultMemoryBudget;
    int ranks = 1;
    int threads = 1;
    std::string json_path, csv_path;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--ranks", ranks, "Logical ranks (power of two)")->check(CLI::PositiveNumber);
        cmd->add_option("--threads", threads, "Worker threads per rank")->check(CLI::PositiveNumber);
        cmd->add_option("--mem-budget", mem_budget, "Memory budget, e.g. 512MiB or 4GB")
            ->transform(CLI::AsSizeValue(false));
    };

    // run
    auto *run = app.add_subcommand("run", "Simulate one circuit file");
    std::string circuit_path;
    std::optional<std::string> partitions, targets, dump;
    std::optional<std::size_t> coeffs;
    run->add_option("--circuit", circuit_path, "Circuit file (native or OpenQASM 2.0)")->required();
    run->add_option("--backend", backend_name, "exact, adaptive or pathsum")->check(CLI::IsMember(backends));
    run->add_option("--partitions", partitions, "pathsum blocks, e.g. \"0-11;12-23\"");
    run->add_option("--coeffs", coeffs, "pathsum: the first M basis states")->check(CLI::PositiveNumber);
    run->add_option("--targets", targets, "pathsum: all0,all1,<bitstring>... or @file");
    run->add_option("--dump", dump, "Write the final state to this binary file");
    run->add_option("--json", json_path, "Write the JSON result here (default stdout)");
    add_common(run);

    // validate
    auto *validate = app.add_subcommand("validate", "Run the known-answer and cross-backend checks");
    std::size_t max_qubits = 12;
    validate->add_option("--max-qubits", max_qubits, "Largest circuit in the suite")->check(CLI::Range(2, 30));
    validate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    validate->add_option("--json", json_path, "Write the JSON report here (default stdout)");

    // bench-ghz
    auto *bench_ghz = app.add_subcommand("bench-ghz", "GHZ-chain sweep over N, one CSV row per N");
    harness::GhzBenchConfig ghz;
    std::optional<std::size_t> ghz_normalize;
    bench_ghz->add_option("--n-min", ghz.n_min, "Smallest N")->check(CLI::PositiveNumber);
    bench_ghz->add_option("--n-max", ghz.n_max, "Largest N")->check(CLI::PositiveNumber);
    bench_ghz->add_option("--normalize-at", ghz_normalize, "Baseline N (default n-min)");
    bench_ghz->add_option("--backend", backend_name, "exact, adaptive or pathsum")->check(CLI::IsMember(backends));
    bench_ghz->add_flag("--weak-scaling", ghz.weak_scaling, "Double the threads for every added qubit");
    bench_ghz->add_option("--repeats", ghz.repeats, "Timed repetitions (median reported)")->check(CLI::PositiveNumber);
    bench_ghz->add_option("--csv", csv_path, "Write CSV here (default stdout)");
    add_common(bench_ghz);

    // bench-random
    auto *bench_random = app.add_subcommand("bench-random", "Path-sum runs of random circuits over a depth range");
    harness::RandomBenchConfig rnd;
    bench_random->add_option("--rows", rnd.rows, "Grid rows")->check(CLI::PositiveNumber);
    bench_random->add_option("--cols", rnd.cols, "Grid columns")->check(CLI::PositiveNumber);
    bench_random->add_option("--depth-min", rnd.depth_min, "Smallest depth")->check(CLI::PositiveNumber);
    bench_random->add_option("--depth-max", rnd.depth_max, "Largest depth")->check(CLI::PositiveNumber);
    bench_random->add_option("--partitions", rnd.partitions, "Blocks, e.g. \"0-4;5-9\" (default bisection)");
    bench_random->add_option("--coeffs", rnd.m, "Number M of coefficients")->check(CLI::PositiveNumber);
    bench_random->add_option("--seed", rnd.seed, "Circuit generator seed");
    bench_random->add_option("--normalize-at", rnd.normalize_at, "Baseline depth (default depth-min)");
    bench_random->add_option("--repeats", rnd.repeats, "Timed repetitions (median reported)")->check(CLI::PositiveNumber);
    bench_random->add_option("--csv", csv_path, "Write CSV here (default stdout)");
    add_common(bench_random);

    // estimate
    auto *estimate = app.add_subcommand("estimate", "Memory needed for an N-qubit run");
    std::size_t estimate_n = 0;
    std::size_t estimate_m = 1;
    estimate->add_option("--n,-n", estimate_n, "Number of qubits")->required()->check(CLI::Range(1, 1000));
    estimate->add_option("--backend", backend_name, "exact, adaptive or pathsum")->check(CLI::IsMember(backends));
    estimate->add_option("--partitions", partitions, "pathsum blocks (default bisection)");
    estimate->add_option("--coeffs", estimate_m, "pathsum: number M of coefficients")->check(CLI::PositiveNumber);
    estimate->add_option("--ranks", ranks, "Ranks")->check(CLI::PositiveNumber);
    estimate->add_option("--json", json_path, "Write the JSON result here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const harness::Backend backend = harness::parse_backend(backend_name);
        if (run->parsed()) {
            harness::RunConfig config{backend, ranks, threads, partitions, coeffs, targets, mem_budget, dump};
            harness::check_config(config);
            Circuit circuit = load_circuit_file(circuit_path);
            emit(json_path, harness::run(circuit, config).dump(2) + '\n');
            return 0;
        }
        if (validate->parsed()) {
            harness::ValidationReport report = harness::validate(max_qubits, threads);
            emit(json_path, report.to_json().dump(2) + '\n');
            if (!report.passed()) {
                for (const auto &c : report.checks) {
                    if (!c.pass) {
                        std::cerr << "FAIL " << c.name << ": observed " << c.observed << ", expected " << c.expected
                                  << " +- " << c.tolerance << '\n';
                    }
                }
                return kExitFailure;
            }
            return 0;
        }
        if (bench_ghz->parsed()) {
            ghz.backend = backend;
            ghz.ranks = ranks;
            ghz.threads = threads;
            ghz.memory_budget = mem_budget;
            ghz.normalize_at = ghz_normalize.value_or(ghz.n_min);
            emit(csv_path, csv_text(harness::bench_ghz(ghz)));
            return 0;
        }
        if (bench_random->parsed()) {
            if (backend != harness::Backend::PathSum && backend_name != "exact") {
                throw harness::ConfigError("bench-random always uses the pathsum backend");
            }
            rnd.ranks = ranks;
            rnd.threads = threads;
            rnd.memory_budget = mem_budget;
            emit(csv_path, csv_text(harness::bench_random(rnd)));
            return 0;
        }
        if (estimate->parsed()) {
            if (backend != harness::Backend::PathSum && partitions) {
                throw harness::ConfigError("--partitions applies only to the pathsum backend");
            }
            emit(json_path, harness::estimate(estimate_n, backend, partitions, estimate_m, ranks).dump(2) + '\n');
            return 0;
        }
    } catch (const MemoryBudgetError &e) {
        std::cerr << "qcsim: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument &e) {
        // Configuration, option values and unreadable circuits.
        std::cerr << "qcsim: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "qcsim: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
