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

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "qcsim/statevector.hpp"

namespace qcsim {

/// Qubit blocks of a circuit and the CZ gates that cross them.
struct PartitionPlan {
    std::size_t num_qubits = 0;
    std::vector<std::vector<Qubit>> partitions;  // each sorted ascending
    std::vector<double> subspace_dims;           // 2^|p|
    std::vector<std::size_t> cut_gates;          // gate indices, ascending
    std::vector<std::size_t> partition_of;       // per qubit
    std::vector<unsigned> local_index;           // per qubit, position inside its partition

    std::size_t S() const noexcept {
        return cut_gates.size();
    }
    std::size_t max_width() const noexcept;
};

/// Throws std::invalid_argument when blocks overlap, miss a qubit, are
/// empty or name qubits outside the circuit, and when the circuit holds a
/// two-qubit gate other than CZ (see rewrite_to_cz_basis).
PartitionPlan make_partition_plan(const Circuit &circuit, std::vector<std::vector<Qubit>> blocks);

/// "0-20;21-41" or "0,2,4;1,3,5": semicolon-separated blocks of ranges and
/// single qubits. Only syntax and range are checked here.
std::vector<std::vector<Qubit>> parse_partition_spec(std::string_view spec, std::size_t num_qubits);

/// Two contiguous blocks, the first with floor(N/2) qubits (one block for N = 1).
std::vector<std::vector<Qubit>> default_bisection(std::size_t num_qubits);

/// x = pi/4 - (i/2) ln(1 + sqrt 2), a solution of cos 2x = i.
Complex cz_path_angle();

/// diag(e^{i(xs - pi/4)}, e^{-i(xs - pi/4)}) for s = +1 or -1.
std::array<Complex, 2> cz_path_diagonal(int s);

/// The two DIAG1 gates replacing CZ(a, b) on path value s. Summing their
/// tensor product over s = +-1 and halving gives CZ.
std::pair<Gate, Gate> cz_path_gates(int s, Qubit a, Qubit b);

struct Subcircuit {
    std::size_t partition = 0;
    std::vector<Qubit> qubits;  // global label of each local qubit
    Circuit circuit{1};
};

/// One subcircuit per partition with every cut CZ replaced by its path
/// gates for `assignment` (values +-1, one per cut gate in plan order).
std::vector<Subcircuit> split_circuit(const Circuit &circuit, const PartitionPlan &plan,
                                      std::span<const int> assignment);

/// <t| W |0> for every partition-local index t, from one simulation.
std::vector<Complex> eval_subcircuit(const Subcircuit &sub, std::span<const std::uint64_t> targets,
                                     const ExecOptions &options = {});

/// The amplitudes to extract.
struct CoefficientRequest {
    std::vector<Bitstring> targets;

    /// Indices 0..M-1 as width-N bitstrings.
    static CoefficientRequest first(std::size_t m, std::size_t num_qubits);
    /// Comma-separated "all0", "all1" or explicit bitstrings.
    static CoefficientRequest parse(std::string_view spec, std::size_t num_qubits);
    /// One bitstring per line; blank lines and '#' comments skipped.
    static CoefficientRequest from_file(const std::string &path, std::size_t num_qubits);
};

struct PathSumOptions {
    int ranks = 1;    // power of two; each takes an aligned range of paths
    int threads = 1;  // per rank, for the subcircuit kernels
    std::uint64_t memory_budget = kDefaultMemoryBudget;  // per rank
};

struct PathSumStats {
    std::uint64_t paths_enumerated = 0;
    std::uint64_t subcircuit_evaluations = 0;
};

/// 2^-S sum over s of prod_p <z_p| W_p(s) |0_p> for every target z. Paths
/// are summed in a fixed binary tree over the path index, so the result
/// does not depend on ranks or threads.
std::vector<Complex> compute_amplitudes(const Circuit &circuit, const PartitionPlan &plan,
                                        const CoefficientRequest &request, const PathSumOptions &options = {},
                                        PathSumStats *stats = nullptr);

struct CostEstimate {
    double time_units = 0;   // 2^S P max(D_p, M) / (R T)
    double space_units = 0;  // R max(D_p, M)
};

CostEstimate cost_estimate(const PartitionPlan &plan, std::size_t m, int ranks, int threads);

}  // namespace qcsim
