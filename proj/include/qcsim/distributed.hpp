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
#include <vector>

#include "qcsim/statevector.hpp"
#include "qcsim/transport.hpp"

namespace qcsim {

/// A state split over R = 2^r ranks. Qubit labels sit at positions: the
/// first N - r positions are bits of the index inside a rank's block, the
/// last r positions are bits of the rank index.
class DistributedState {
   public:
    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    int num_ranks() const noexcept {
        return static_cast<int>(blocks_.size());
    }
    unsigned rank_bits() const noexcept {
        return rank_bits_;
    }
    unsigned local_bits() const noexcept {
        return static_cast<unsigned>(num_qubits_) - rank_bits_;
    }
    std::size_t block_size() const noexcept {
        return std::size_t{1} << local_bits();
    }
    std::span<Complex> block(int rank) {
        return blocks_.at(static_cast<std::size_t>(rank));
    }
    std::span<const Complex> block(int rank) const {
        return blocks_.at(static_cast<std::size_t>(rank));
    }
    unsigned position_of(Qubit q) const {
        return position_of_.at(q);
    }
    Qubit qubit_at(unsigned position) const {
        return qubit_at_.at(position);
    }
    bool is_global(Qubit q) const {
        return position_of(q) >= local_bits();
    }
    /// Swaps the positions of two labels (used by the SWAP gate, which is a
    /// relabeling and moves no data).
    void swap_labels(Qubit a, Qubit b);
    /// Transposes the contents of two positions without moving data; the
    /// caller moves the amplitudes. Used by remap_qubits.
    void swap_positions(unsigned a, unsigned b);
    /// Last gate index that used each qubit (-1 if never), for victim choice.
    std::vector<std::int64_t> &last_use() noexcept {
        return last_use_;
    }
    const std::vector<std::int64_t> &last_use() const noexcept {
        return last_use_;
    }

   private:
    friend DistributedState partition_state(std::size_t, int, std::uint64_t);

    std::size_t num_qubits_ = 0;
    unsigned rank_bits_ = 0;
    std::vector<tracked_vector<Complex>> blocks_;
    std::vector<unsigned> position_of_;
    std::vector<Qubit> qubit_at_;
    std::vector<std::int64_t> last_use_;
};

enum class CommKind { Local, PairExchange, Remap };

const char *to_string(CommKind kind);

struct CommPlan {
    CommKind kind = CommKind::Local;
    /// Rank-index masks of the partners each rank talks to.
    std::vector<std::uint64_t> partner_offsets;
    /// Amplitude bytes each rank sends.
    std::uint64_t bytes_per_rank = 0;
    /// Remap only: (local position, global position) transpositions, in order.
    std::vector<std::pair<unsigned, unsigned>> swaps;
};

struct CommStats {
    std::uint64_t local_gates = 0;
    std::uint64_t pair_exchanges = 0;
    std::uint64_t remaps = 0;  // transpositions performed
    std::uint64_t bytes_per_rank = 0;
    void record(const CommPlan &plan);
};

struct DistributedOptions {
    int ranks = 1;
    int threads = 1;  // per rank
    std::uint64_t memory_budget_per_rank = kDefaultMemoryBudget;
};

/// |0...0> over `ranks` blocks with the identity layout. Throws
/// std::invalid_argument unless ranks = 2^r with r <= n, and
/// MemoryBudgetError when one block exceeds the per-rank budget.
DistributedState partition_state(std::size_t n, int ranks, std::uint64_t memory_budget_per_rank = kDefaultMemoryBudget);

/// How `gate` would run on the current layout. Gates whose non-local qubits
/// only contribute phases or controls (diagonal gates, CNOT controls) and
/// SWAP (a relabeling) are Local. Otherwise the cheaper of a pair exchange
/// and a remap, comparing bytes for this gate plus `next` (if given) under
/// the layout each choice leaves behind. Ties go to the remap.
CommPlan plan_gate(const DistributedState &state, const Gate &gate, const Gate *next = nullptr);

/// Runs plan_gate's choice; `index` is the gate's position in its circuit
/// (for least-recently-used victim choice).
void apply_gate_distributed(DistributedState &state, Transport &transport, const Gate &gate,
                            const Gate *next = nullptr, int threads = 1, CommStats *stats = nullptr,
                            std::int64_t index = -1);

/// Transposes a local and a global position, exchanging half of every
/// block with the partner rank. Throws std::invalid_argument when the
/// positions are equal, out of range, or both local / both global.
void remap_qubits(DistributedState &state, Transport &transport, unsigned pos_a, unsigned pos_b);

/// The full state in label order. Refuses when 2^(N+4) bytes exceed the budget.
StateVector gather(const DistributedState &state, std::uint64_t memory_budget = kDefaultMemoryBudget);

/// Runs the circuit over an in-process transport.
DistributedState run_circuit_distributed(const Circuit &circuit, const DistributedOptions &options,
                                         CommStats *stats = nullptr);

/// <Q_x>, <Q_y>, <Q_z> of every qubit; global qubits are remapped local first.
ExpectationReport measure_expectations(DistributedState &state, Transport &transport, int threads = 1,
                                       CommStats *stats = nullptr);

}  // namespace qcsim
