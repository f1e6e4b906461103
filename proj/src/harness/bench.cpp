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
#include <cmath>
#include <cstdio>
#include <optional>

#include "qcsim/codec.hpp"
#include "qcsim/distributed.hpp"
#include "qcsim/generators.hpp"
#include "qcsim/harness.hpp"
#include "qcsim/pathsum.hpp"
#include "util.hpp"

namespace qcsim::harness {

std::string csv_header() {
    return "circuit,n,backend,ranks,threads,partition,S,M,gate_count,elapsed_s,seconds_per_gate,normalized_time,"
           "peak_memory_bytes,status";
}

namespace {

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return quoted + '"';
}

std::string csv_number(const std::optional<double> &value) {
    if (!value) {
        return {};
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", *value);
    return buf;
}

}  // namespace

std::string to_csv(const BenchRecord &r) {
    std::string line = csv_field(r.circuit);
    for (const std::string &field :
         {std::to_string(r.n), csv_field(r.backend), std::to_string(r.ranks), std::to_string(r.threads),
          csv_field(r.partition), std::to_string(r.S), std::to_string(r.M), std::to_string(r.gate_count),
          csv_number(r.elapsed_s), csv_number(r.seconds_per_gate), csv_number(r.normalized_time),
          std::to_string(r.peak_memory_bytes), csv_field(r.status)}) {
        line += ',';
        line += field;
    }
    return line;
}

void normalize(std::vector<BenchRecord> &records, std::size_t baseline) {
    if (baseline >= records.size()) {
        throw ConfigError("baseline row " + std::to_string(baseline) + " does not exist");
    }
    const std::optional<double> base = records[baseline].seconds_per_gate;
    for (std::size_t i = 0; i < records.size(); ++i) {
        BenchRecord &r = records[i];
        if (i == baseline && base) {
            r.normalized_time = 1.0;
        } else if (base && *base > 0 && r.seconds_per_gate) {
            r.normalized_time = *r.seconds_per_gate / *base;
        } else {
            r.normalized_time.reset();
        }
    }
}

namespace {

void finish_row(BenchRecord &row, double elapsed) {
    row.elapsed_s = elapsed;
    row.seconds_per_gate = row.gate_count > 0 ? elapsed / static_cast<double>(row.gate_count) : 0.0;
    row.peak_memory_bytes = memory_tracking::peak_bytes();
}

void refuse_row(BenchRecord &row, const MemoryBudgetError &e) {
    row.status = "refused: needs " + std::to_string(e.required_bytes()) + " bytes";
    row.elapsed_s.reset();
    row.seconds_per_gate.reset();
}

BenchRecord ghz_row(std::size_t n, int threads, const GhzBenchConfig &config) {
    const Circuit circuit = gen_ghz_chain(n);
    BenchRecord row;
    row.circuit = circuit.name();
    row.n = n;
    row.backend = to_string(config.backend);
    row.ranks = config.ranks;
    row.threads = threads;
    row.gate_count = circuit.size() + n;
    memory_tracking::reset_peak();
    try {
        double elapsed = 0;
        switch (config.backend) {
            case Backend::Exact:
                if (config.ranks == 1) {
                    std::optional<StateVector> state;
                    elapsed = detail::median_seconds(
                        config.repeats,
                        [&] {
                            state.reset();
                            state.emplace(init_state(n, config.memory_budget));
                        },
                        [&] {
                            for (const Gate &g : circuit) {
                                apply_gate(*state, g, threads);
                            }
                            measure_expectations(*state, threads);
                        });
                } else {
                    std::optional<DistributedState> state;
                    std::optional<InProcessTransport> transport;
                    elapsed = detail::median_seconds(
                        config.repeats,
                        [&] {
                            state.reset();
                            state.emplace(partition_state(n, config.ranks, config.memory_budget));
                            transport.emplace(config.ranks);
                        },
                        [&] {
                            for (std::size_t i = 0; i < circuit.size(); ++i) {
                                const Gate *next = i + 1 < circuit.size() ? &circuit[i + 1] : nullptr;
                                apply_gate_distributed(*state, *transport, circuit[i], next, threads, nullptr,
                                                       static_cast<std::int64_t>(i));
                            }
                            measure_expectations(*state, *transport, threads);
                        });
                }
                break;
            case Backend::Adaptive: {
                if (config.ranks != 1) {
                    throw ConfigError("the adaptive backend runs on a single rank");
                }
                std::optional<EncodedState> state;
                elapsed = detail::median_seconds(
                    config.repeats,
                    [&] {
                        state.reset();
                        state.emplace(init_encoded_state(n, config.memory_budget));
                    },
                    [&] {
                        for (const Gate &g : circuit) {
                            apply_gate_encoded(*state, g, threads);
                        }
                        measure_expectations(*state, threads);
                    });
                break;
            }
            case Backend::PathSum: {
                const Circuit cz = rewrite_to_cz_basis(circuit);
                const auto blocks = default_bisection(n);
                const PartitionPlan plan = make_partition_plan(cz, blocks);
                const CoefficientRequest request = CoefficientRequest::parse("all0,all1", n);
                row.partition = detail::format_partition(plan.partitions);
                row.S = plan.S();
                row.M = request.targets.size();
                row.gate_count = cz.size();
                elapsed = detail::median_seconds(
                    config.repeats, [] {},
                    [&] { compute_amplitudes(cz, plan, request, {config.ranks, threads, config.memory_budget}); });
                break;
            }
        }
        finish_row(row, elapsed);
    } catch (const MemoryBudgetError &e) {
        refuse_row(row, e);
    }
    return row;
}

}  // namespace

std::vector<BenchRecord> bench_ghz(const GhzBenchConfig &config) {
    if (config.n_min < 1 || config.n_min > config.n_max) {
        throw ConfigError("need 1 <= n_min <= n_max");
    }
    if (config.normalize_at < config.n_min || config.normalize_at > config.n_max) {
        throw ConfigError("--normalize-at must lie in [n_min, n_max]");
    }
    if (config.ranks < 1 || !std::has_single_bit(static_cast<unsigned>(config.ranks)) || config.threads < 1) {
        throw ConfigError("ranks must be a power of two and threads at least 1");
    }
    std::vector<BenchRecord> rows;
    for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
        int threads = config.threads;
        if (config.weak_scaling) {
            threads <<= (n - config.n_min);
        }
        rows.push_back(ghz_row(n, threads, config));
    }
    normalize(rows, config.normalize_at - config.n_min);
    return rows;
}

std::vector<BenchRecord> bench_random(const RandomBenchConfig &config) {
    if (config.depth_min < 1 || config.depth_min > config.depth_max) {
        throw ConfigError("need 1 <= depth_min <= depth_max");
    }
    const std::size_t baseline_depth = config.normalize_at.value_or(config.depth_min);
    if (baseline_depth < config.depth_min || baseline_depth > config.depth_max) {
        throw ConfigError("--normalize-at must lie in [depth_min, depth_max]");
    }
    const std::size_t n = config.rows * config.cols;
    const auto blocks = config.partitions ? parse_partition_spec(*config.partitions, n) : default_bisection(n);
    std::vector<BenchRecord> rows;
    for (std::size_t depth = config.depth_min; depth <= config.depth_max; ++depth) {
        const Circuit circuit = rewrite_to_cz_basis(gen_random_circuit(config.rows, config.cols, depth, config.seed));
        const PartitionPlan plan = make_partition_plan(circuit, blocks);
        const CoefficientRequest request = CoefficientRequest::first(config.m, n);
        BenchRecord row;
        row.circuit = circuit.name();
        row.n = n;
        row.backend = to_string(Backend::PathSum);
        row.ranks = config.ranks;
        row.threads = config.threads;
        row.partition = detail::format_partition(plan.partitions);
        row.S = plan.S();
        row.M = config.m;
        row.gate_count = circuit.size();
        memory_tracking::reset_peak();
        try {
            double elapsed = detail::median_seconds(config.repeats, [] {}, [&] {
                compute_amplitudes(circuit, plan, request, {config.ranks, config.threads, config.memory_budget});
            });
            finish_row(row, elapsed);
        } catch (const MemoryBudgetError &e) {
            refuse_row(row, e);
        }
        rows.push_back(std::move(row));
    }
    normalize(rows, baseline_depth - config.depth_min);
    return rows;
}

}  // namespace qcsim::harness
