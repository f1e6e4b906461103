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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcsim/circuit.hpp"
#include "qcsim/memory.hpp"

namespace qcsim::harness {

/// Inconsistent or unsupported options; the CLI maps it to exit code 2.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class Backend { Exact, Adaptive, PathSum };

Backend parse_backend(std::string_view name);
const char *to_string(Backend backend);

struct RunConfig {
    Backend backend = Backend::Exact;
    int ranks = 1;
    int threads = 1;
    std::optional<std::string> partitions;  // pathsum only
    std::optional<std::size_t> coeffs;      // pathsum only
    std::optional<std::string> targets;     // pathsum only; "@file" reads a file
    std::uint64_t memory_budget = kDefaultMemoryBudget;
    std::optional<std::string> dump_path;   // exact / adaptive state dump
};

/// Rejects option combinations that make no sense for the backend.
void check_config(const RunConfig &config);

/// Runs one circuit and reports expectations (exact, adaptive) or the
/// requested amplitudes (pathsum), with timing and backend counters.
nlohmann::json run(const Circuit &circuit, const RunConfig &config);

/// One benchmark row.
struct BenchRecord {
    std::string circuit;
    std::size_t n = 0;
    std::string backend;
    int ranks = 1;
    int threads = 1;
    std::string partition;
    std::size_t S = 0;
    std::size_t M = 0;
    std::size_t gate_count = 0;
    std::optional<double> elapsed_s;
    std::optional<double> seconds_per_gate;
    std::optional<double> normalized_time;
    std::uint64_t peak_memory_bytes = 0;
    std::string status = "ok";
};

std::string csv_header();
std::string to_csv(const BenchRecord &record);

/// normalized_time = seconds_per_gate / seconds_per_gate of `baseline`.
void normalize(std::vector<BenchRecord> &records, std::size_t baseline);

struct GhzBenchConfig {
    std::size_t n_min = 10;
    std::size_t n_max = 16;
    std::size_t normalize_at = 10;
    Backend backend = Backend::Exact;
    int ranks = 1;
    int threads = 1;
    /// Double the threads for every qubit above n_min.
    bool weak_scaling = false;
    int repeats = 3;
    std::uint64_t memory_budget = kDefaultMemoryBudget;
};

/// GHZ chain plus an expectation measurement of every qubit, one row per N.
/// gate_count = gates + N (one operation per measured qubit). Pathsum rows
/// use two contiguous blocks and targets all0, all1.
std::vector<BenchRecord> bench_ghz(const GhzBenchConfig &config);

struct RandomBenchConfig {
    std::size_t rows = 2;
    std::size_t cols = 5;
    std::size_t depth_min = 4;
    std::size_t depth_max = 12;
    std::optional<std::string> partitions;
    std::size_t m = 64;
    int ranks = 1;
    int threads = 1;
    std::uint64_t seed = 1;
    int repeats = 3;
    std::optional<std::size_t> normalize_at;  // depth; default depth_min
    std::uint64_t memory_budget = kDefaultMemoryBudget;
};

/// Path-sum runs of random circuits over a depth range, one row per depth.
std::vector<BenchRecord> bench_random(const RandomBenchConfig &config);

struct ValidationCheck {
    std::string name;
    double expected = 0;
    double observed = 0;
    double tolerance = 0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool passed() const;
    nlohmann::json to_json() const;
};

/// Known-answer and cross-backend checks on circuits of at most
/// `max_qubits` qubits.
ValidationReport validate(std::size_t max_qubits = 12, int threads = 1);

/// Bytes needed for an N-qubit run on `backend`. For pathsum, the per-rank
/// figure max(D_p, M) * 16 with the given or default blocks.
nlohmann::json estimate(std::size_t n, Backend backend, const std::optional<std::string> &partitions = std::nullopt,
                        std::size_t m = 1, int ranks = 1);

}  // namespace qcsim::harness
