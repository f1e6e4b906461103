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

#include <bit>
#include <chrono>
#include <fstream>

#include "qcsim/codec.hpp"
#include "qcsim/distributed.hpp"
#include "qcsim/harness.hpp"
#include "qcsim/pathsum.hpp"
#include "util.hpp"

namespace qcsim::harness {

using nlohmann::json;

Backend parse_backend(std::string_view name) {
    if (name == "exact") {
        return Backend::Exact;
    }
    if (name == "adaptive") {
        return Backend::Adaptive;
    }
    if (name == "pathsum") {
        return Backend::PathSum;
    }
    throw ConfigError("unknown backend '" + std::string(name) + "' (expected exact, adaptive or pathsum)");
}

const char *to_string(Backend backend) {
    switch (backend) {
        case Backend::Exact:
            return "exact";
        case Backend::Adaptive:
            return "adaptive";
        case Backend::PathSum:
            return "pathsum";
    }
    return "?";
}

void check_config(const RunConfig &config) {
    if (config.ranks < 1 || !std::has_single_bit(static_cast<unsigned>(config.ranks))) {
        throw ConfigError("--ranks must be a power of two, got " + std::to_string(config.ranks));
    }
    if (config.threads < 1) {
        throw ConfigError("--threads must be at least 1");
    }
    const bool path_options = config.partitions || config.coeffs || config.targets;
    if (config.backend != Backend::PathSum && path_options) {
        throw ConfigError("--partitions, --coeffs and --targets apply only to the pathsum backend");
    }
    if (config.backend == Backend::Adaptive && config.ranks > 1) {
        throw ConfigError("the adaptive backend runs on a single rank");
    }
    if (config.backend == Backend::PathSum) {
        if (config.coeffs && config.targets) {
            throw ConfigError("give either --coeffs or --targets, not both");
        }
        if (!config.coeffs && !config.targets) {
            throw ConfigError("the pathsum backend needs --coeffs M or --targets");
        }
        if (config.dump_path) {
            throw ConfigError("--dump is not available for the pathsum backend");
        }
    }
}

namespace {

json expectations_json(const ExpectationReport &report) {
    json rows = json::array();
    for (std::size_t q = 0; q < report.qubits.size(); ++q) {
        const auto &e = report.qubits[q];
        rows.push_back({{"qubit", q}, {"x", e.x}, {"y", e.y}, {"z", e.z}});
    }
    return rows;
}

std::ofstream open_dump(const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write dump file " + path);
    }
    return out;
}

}  // namespace

json run(const Circuit &circuit, const RunConfig &config) {
    check_config(config);
    const std::size_t n = circuit.num_qubits();
    json out = {{"circuit", circuit.name()}, {"num_qubits", n},         {"backend", to_string(config.backend)},
                {"ranks", config.ranks},     {"threads", config.threads}, {"gate_count", circuit.size()}};
    memory_tracking::reset_peak();
    double elapsed = 0;

    if (config.backend == Backend::Exact && config.ranks == 1) {
        StateVector state = init_state(n, config.memory_budget);
        auto start = std::chrono::steady_clock::now();
        for (const Gate &g : circuit) {
            apply_gate(state, g, config.threads);
        }
        ExpectationReport report = measure_expectations(state, config.threads);
        elapsed = detail::seconds_since(start);
        out["expectations"] = expectations_json(report);
        if (config.dump_path) {
            auto file = open_dump(*config.dump_path);
            write_state_dump(file, state);
        }
    } else if (config.backend == Backend::Exact) {
        DistributedState state = partition_state(n, config.ranks, config.memory_budget);
        InProcessTransport transport(config.ranks);
        CommStats stats;
        auto start = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < circuit.size(); ++i) {
            const Gate *next = i + 1 < circuit.size() ? &circuit[i + 1] : nullptr;
            apply_gate_distributed(state, transport, circuit[i], next, config.threads, &stats,
                                   static_cast<std::int64_t>(i));
        }
        ExpectationReport report = measure_expectations(state, transport, config.threads, &stats);
        elapsed = detail::seconds_since(start);
        out["expectations"] = expectations_json(report);
        out["communication"] = {{"local_gates", stats.local_gates},
                                {"pair_exchanges", stats.pair_exchanges},
                                {"remaps", stats.remaps},
                                {"bytes_per_rank", stats.bytes_per_rank},
                                {"bytes_sent", transport.total_bytes_sent()}};
        if (config.dump_path) {
            auto file = open_dump(*config.dump_path);
            write_state_dump(file, gather(state, config.memory_budget));
        }
    } else if (config.backend == Backend::Adaptive) {
        EncodedState state = init_encoded_state(n, config.memory_budget);
        CodecStats stats;
        auto start = std::chrono::steady_clock::now();
        for (const Gate &g : circuit) {
            apply_gate_encoded(state, g, config.threads, &stats);
        }
        ExpectationReport report = measure_expectations(state, config.threads);
        elapsed = detail::seconds_since(start);
        out["expectations"] = expectations_json(report);
        out["codec"] = {{"table_size", state.codebook().size()},
                        {"saturated", state.codebook().saturated()},
                        {"insertions", state.codebook().insertion_count()},
                        {"lossy_encodes", stats.lossy_encodes},
                        {"max_rounding_error", stats.max_rounding_error}};
        if (config.dump_path) {
            auto file = open_dump(*config.dump_path);
            write_encoded_dump(file, state);
        }
    } else {
        Circuit cz = rewrite_to_cz_basis(circuit);
        auto blocks = config.partitions ? parse_partition_spec(*config.partitions, n) : default_bisection(n);
        PartitionPlan plan = make_partition_plan(cz, blocks);
        CoefficientRequest request;
        if (config.coeffs) {
            request = CoefficientRequest::first(*config.coeffs, n);
        } else if (config.targets->starts_with('@')) {
            request = CoefficientRequest::from_file(config.targets->substr(1), n);
        } else {
            request = CoefficientRequest::parse(*config.targets, n);
        }
        PathSumStats stats;
        auto start = std::chrono::steady_clock::now();
        std::vector<Complex> amps =
            compute_amplitudes(cz, plan, request, {config.ranks, config.threads, config.memory_budget}, &stats);
        elapsed = detail::seconds_since(start);
        json rows = json::array();
        for (std::size_t m = 0; m < amps.size(); ++m) {
            rows.push_back({{"bits", request.targets[m].to_string()}, {"re", amps[m].real()}, {"im", amps[m].imag()}});
        }
        CostEstimate cost = cost_estimate(plan, amps.size(), config.ranks, config.threads);
        out["gate_count"] = cz.size();
        out["partition"] = detail::format_partition(plan.partitions);
        out["S"] = plan.S();
        out["M"] = amps.size();
        out["paths"] = stats.paths_enumerated;
        out["subcircuit_evaluations"] = stats.subcircuit_evaluations;
        out["cost"] = {{"time_units", cost.time_units}, {"space_units", cost.space_units}};
        out["amplitudes"] = rows;
    }
    out["elapsed_s"] = elapsed;
    out["peak_memory_bytes"] = memory_tracking::peak_bytes();
    return out;
}

}  // namespace qcsim::harness
