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

#include "qcsim/distributed.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "qcsim/kernels.hpp"

namespace qcsim {

void DistributedState::swap_labels(Qubit a, Qubit b) {
    std::swap(position_of_.at(a), position_of_.at(b));
    qubit_at_[position_of_[a]] = a;
    qubit_at_[position_of_[b]] = b;
}

void DistributedState::swap_positions(unsigned a, unsigned b) {
    swap_labels(qubit_at_.at(a), qubit_at_.at(b));
}

const char *to_string(CommKind kind) {
    switch (kind) {
        case CommKind::Local:
            return "local";
        case CommKind::PairExchange:
            return "pair_exchange";
        case CommKind::Remap:
            return "remap";
    }
    return "?";
}

void CommStats::record(const CommPlan &plan) {
    switch (plan.kind) {
        case CommKind::Local:
            ++local_gates;
            break;
        case CommKind::PairExchange:
            ++pair_exchanges;
            break;
        case CommKind::Remap:
            remaps += plan.swaps.size();
            break;
    }
    bytes_per_rank += plan.bytes_per_rank;
}

DistributedState partition_state(std::size_t n, int ranks, std::uint64_t memory_budget_per_rank) {
    if (n < 1 || n > 62) {
        throw std::invalid_argument("distributed state needs 1..62 qubits, got " + std::to_string(n));
    }
    if (ranks < 1 || !std::has_single_bit(static_cast<unsigned>(ranks))) {
        throw std::invalid_argument("rank count " + std::to_string(ranks) + " is not a power of two");
    }
    const auto r = static_cast<unsigned>(std::countr_zero(static_cast<unsigned>(ranks)));
    if (r > n) {
        throw std::invalid_argument(
            std::to_string(ranks) + " ranks exceed the 2^" + std::to_string(n) + " amplitudes of the state");
    }
    check_budget(memory_bytes(n - r), memory_budget_per_rank);
    DistributedState state;
    state.num_qubits_ = n;
    state.rank_bits_ = r;
    state.blocks_.resize(static_cast<std::size_t>(ranks));
    for (auto &block : state.blocks_) {
        block.assign(std::size_t{1} << (n - r), Complex{0, 0});
    }
    state.blocks_[0][0] = 1;
    for (unsigned p = 0; p < n; ++p) {
        state.position_of_.push_back(p);
        state.qubit_at_.push_back(p);
    }
    state.last_use_.assign(n, -1);
    return state;
}

namespace {

/// The label layout of a state, cheap to copy for what-if planning.
struct Layout {
    unsigned local_bits;
    std::size_t block_size;
    std::vector<unsigned> position_of;
    std::vector<Qubit> qubit_at;
    const std::vector<std::int64_t> *last_use;

    explicit Layout(const DistributedState &s)
        : local_bits(s.local_bits()), block_size(s.block_size()), last_use(&s.last_use()) {
        for (Qubit q = 0; q < s.num_qubits(); ++q) {
            position_of.push_back(s.position_of(q));
            qubit_at.push_back(s.qubit_at(static_cast<unsigned>(q)));
        }
    }
    bool global(Qubit q) const {
        return position_of[q] >= local_bits;
    }
    void transpose(unsigned a, unsigned b) {
        std::swap(qubit_at[a], qubit_at[b]);
        position_of[qubit_at[a]] = a;
        position_of[qubit_at[b]] = b;
    }
};

/// Qubits of `gate` whose amplitudes must sit in one block. Controls and
/// diagonal factors can be taken from the rank index instead; SWAP is a
/// relabeling.
std::vector<Qubit> data_qubits(const Gate &gate) {
    switch (gate.kind()) {
        case GateKind::I:
        case GateKind::SWAP:
            return {};
        case GateKind::CNOT:
            return {gate.qubit(1)};
        default:
            break;
    }
    if (gate.is_diagonal()) {
        return {};
    }
    return {gate.qubit(0)};
}

std::vector<Qubit> missing_qubits(const Layout &layout, const Gate &gate) {
    std::vector<Qubit> missing;
    for (Qubit q : data_qubits(gate)) {
        if (layout.global(q)) {
            missing.push_back(q);
        }
    }
    return missing;
}

CommPlan exchange_plan(const Layout &layout, const std::vector<Qubit> &missing) {
    CommPlan plan;
    plan.kind = CommKind::PairExchange;
    const std::size_t k = missing.size();
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << k); ++subset) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (subset >> i & 1) {
                mask |= std::uint64_t{1} << (layout.position_of[missing[i]] - layout.local_bits);
            }
        }
        plan.partner_offsets.push_back(mask);
    }
    plan.bytes_per_rank = plan.partner_offsets.size() * layout.block_size * sizeof(Complex);
    return plan;
}

/// Local positions to trade for the missing qubits, least recently used
/// first, never one holding a qubit of `gate` or `next`.
std::optional<CommPlan> remap_plan(const Layout &layout, const Gate &gate, const Gate *next,
                                   const std::vector<Qubit> &missing) {
    std::vector<bool> pinned(layout.position_of.size(), false);
    for (Qubit q : gate.qubits()) {
        pinned[q] = true;
    }
    if (next) {
        for (Qubit q : next->qubits()) {
            if (q < pinned.size()) {
                pinned[q] = true;
            }
        }
    }
    CommPlan plan;
    plan.kind = CommKind::Remap;
    for (Qubit q : missing) {
        std::optional<unsigned> best;
        for (unsigned p = 0; p < layout.local_bits; ++p) {
            Qubit holder = layout.qubit_at[p];
            if (pinned[holder]) {
                continue;
            }
            if (!best || (*layout.last_use)[holder] < (*layout.last_use)[layout.qubit_at[*best]]) {
                best = p;
            }
        }
        if (!best) {
            return std::nullopt;
        }
        pinned[layout.qubit_at[*best]] = true;
        const unsigned global = layout.position_of[q];
        plan.swaps.emplace_back(*best, global);
        plan.partner_offsets.push_back(std::uint64_t{1} << (global - layout.local_bits));
    }
    plan.bytes_per_rank = plan.swaps.size() * (layout.block_size / 2) * sizeof(Complex);
    return plan;
}

CommPlan plan_on(const Layout &layout, const Gate &gate, const Gate *next) {
    std::vector<Qubit> missing = missing_qubits(layout, gate);
    if (missing.empty()) {
        return {};
    }
    CommPlan exchange = exchange_plan(layout, missing);
    std::optional<CommPlan> remap = remap_plan(layout, gate, next, missing);
    if (!remap) {
        return exchange;
    }
    if (!next) {
        return remap->bytes_per_rank <= exchange.bytes_per_rank ? *remap : exchange;
    }
    std::uint64_t exchange_total = exchange.bytes_per_rank + plan_on(layout, *next, nullptr).bytes_per_rank;
    Layout after = layout;
    for (auto [a, b] : remap->swaps) {
        after.transpose(a, b);
    }
    std::uint64_t remap_total = remap->bytes_per_rank + plan_on(after, *next, nullptr).bytes_per_rank;
    return remap_total <= exchange_total ? *remap : exchange;
}

void check_gate(const DistributedState &state, const Gate &gate) {
    for (Qubit q : gate.qubits()) {
        if (q >= state.num_qubits()) {
            throw std::out_of_range(
                "gate " + to_string(gate) + " outside " + std::to_string(state.num_qubits()) + "-qubit state");
        }
    }
}

int rank_bit(const DistributedState &state, int rank, Qubit q) {
    return static_cast<int>((static_cast<unsigned>(rank) >> (state.position_of(q) - state.local_bits())) & 1U);
}

/// Multiplies the whole block by `factor`; also right for one-amplitude blocks.
void scale_block(std::span<Complex> block, Complex factor) {
    for (Complex &a : block) {
        a *= factor;
    }
}

/// Applies a gate whose data qubits are all local to one rank's block.
void apply_local(DistributedState &state, int rank, const Gate &gate, int threads) {
    std::span<Complex> block = state.block(rank);
    auto bit_of = [&](Qubit q) { return state.position_of(q); };
    switch (gate.kind()) {
        case GateKind::I:
        case GateKind::SWAP:
            return;
        case GateKind::CNOT: {
            Qubit c = gate.qubit(0), t = gate.qubit(1);
            if (!state.is_global(c)) {
                return kernels::apply_cnot(block, bit_of(c), bit_of(t), threads);
            }
            if (rank_bit(state, rank, c)) {
                kernels::apply_x(block, bit_of(t), threads);
            }
            return;
        }
        case GateKind::CZ: {
            Qubit a = gate.qubit(0), b = gate.qubit(1);
            bool ga = state.is_global(a), gb = state.is_global(b);
            if (!ga && !gb) {
                return kernels::apply_cz(block, bit_of(a), bit_of(b), threads);
            }
            if (ga && gb) {
                if (rank_bit(state, rank, a) && rank_bit(state, rank, b)) {
                    scale_block(block, -1);
                }
                return;
            }
            Qubit global = ga ? a : b, local = ga ? b : a;
            if (rank_bit(state, rank, global)) {
                kernels::apply_diagonal(block, bit_of(local), 1, -1, threads);
            }
            return;
        }
        default:
            break;
    }
    const Qubit q = gate.qubit(0);
    if (gate.is_diagonal()) {
        auto d = gate.diagonal();
        if (!state.is_global(q)) {
            return kernels::apply_diagonal(block, bit_of(q), d[0], d[1], threads);
        }
        Complex factor = d[static_cast<std::size_t>(rank_bit(state, rank, q))];
        if (factor != Complex{1, 0}) {
            scale_block(block, factor);
        }
        return;
    }
    kernels::apply_matrix(block, bit_of(q), gate.matrix(), threads);
}

/// Every rank of a group of 2^k ranks (k = missing qubits) sends its whole
/// block to the others, rebuilds the group's 2^k blocks, applies the gate
/// there and keeps its own block.
void run_exchange(DistributedState &state, Transport &transport, const Gate &gate, const CommPlan &plan,
                  const std::vector<Qubit> &missing, int threads) {
    const unsigned local = state.local_bits();
    const std::size_t block_size = state.block_size();
    run_ranks(transport, [&](int rank) {
        std::span<Complex> block = state.block(rank);
        for (std::uint64_t offset : plan.partner_offsets) {
            transport.send(rank, static_cast<int>(static_cast<std::uint64_t>(rank) ^ offset),
                           Payload(block.begin(), block.end()));
        }
        auto slot_of = [&](std::uint64_t member) {
            std::size_t slot = 0;
            for (std::size_t i = 0; i < missing.size(); ++i) {
                slot |= ((member >> (state.position_of(missing[i]) - local)) & 1U) << i;
            }
            return slot;
        };
        std::vector<Complex> group(block_size << missing.size());
        const std::size_t own = slot_of(static_cast<std::uint64_t>(rank));
        std::copy(block.begin(), block.end(), group.begin() + static_cast<std::ptrdiff_t>(own * block_size));
        for (std::uint64_t offset : plan.partner_offsets) {
            const auto peer = static_cast<std::uint64_t>(rank) ^ offset;
            Payload data = transport.recv(rank, static_cast<int>(peer));
            if (data.size() != block_size) {
                throw TransportError(rank, static_cast<int>(peer), "short block in pair exchange");
            }
            std::copy(data.begin(), data.end(), group.begin() + static_cast<std::ptrdiff_t>(slot_of(peer) * block_size));
        }
        auto bit_of = [&](Qubit q) -> unsigned {
            auto it = std::find(missing.begin(), missing.end(), q);
            return it == missing.end() ? state.position_of(q) : local + static_cast<unsigned>(it - missing.begin());
        };
        if (gate.kind() == GateKind::CNOT && state.is_global(gate.qubit(0)) &&
            std::find(missing.begin(), missing.end(), gate.qubit(0)) == missing.end()) {
            if (rank_bit(state, rank, gate.qubit(0))) {
                kernels::apply_x(group, bit_of(gate.qubit(1)), threads);
            }
        } else {
            std::vector<unsigned> bits;
            for (Qubit q : gate.qubits()) {
                bits.push_back(bit_of(q));
            }
            kernels::apply_gate(group, gate, bits, threads);
        }
        auto first = group.begin() + static_cast<std::ptrdiff_t>(own * block_size);
        std::copy(first, first + static_cast<std::ptrdiff_t>(block_size), block.begin());
    });
}

}  // namespace

CommPlan plan_gate(const DistributedState &state, const Gate &gate, const Gate *next) {
    check_gate(state, gate);
    return plan_on(Layout(state), gate, next);
}

void remap_qubits(DistributedState &state, Transport &transport, unsigned pos_a, unsigned pos_b) {
    const unsigned n = static_cast<unsigned>(state.num_qubits());
    if (pos_a == pos_b) {
        throw std::invalid_argument("remap needs two different positions, got " + std::to_string(pos_a) + " twice");
    }
    if (pos_a >= n || pos_b >= n) {
        throw std::invalid_argument("remap position outside 0.." + std::to_string(n - 1));
    }
    const unsigned local_bits = state.local_bits();
    if ((pos_a < local_bits) == (pos_b < local_bits)) {
        throw std::invalid_argument("remap needs one local and one global position");
    }
    const unsigned local = std::min(pos_a, pos_b);
    const unsigned global = std::max(pos_a, pos_b);
    const unsigned rank_shift = global - local_bits;
    const std::int64_t half = static_cast<std::int64_t>(state.block_size() / 2);
    run_ranks(transport, [&](int rank) {
        const std::uint64_t bit = (static_cast<unsigned>(rank) >> rank_shift) & 1U;
        const int partner = rank ^ (1 << rank_shift);
        // Cells whose local bit differs from this rank's bit belong to the partner.
        const std::uint64_t away = (bit ^ 1U) << local;
        std::span<Complex> block = state.block(rank);
        Payload out(static_cast<std::size_t>(half));
        for (std::int64_t k = 0; k < half; ++k) {
            out[static_cast<std::size_t>(k)] = block[kernels::insert_zero_bit(static_cast<std::uint64_t>(k), local) | away];
        }
        transport.send(rank, partner, std::move(out));
        Payload in = transport.recv(rank, partner);
        if (in.size() != static_cast<std::size_t>(half)) {
            throw TransportError(rank, partner, "short half-block in remap");
        }
        for (std::int64_t k = 0; k < half; ++k) {
            block[kernels::insert_zero_bit(static_cast<std::uint64_t>(k), local) | away] = in[static_cast<std::size_t>(k)];
        }
    });
    state.swap_positions(local, global);
}

void apply_gate_distributed(DistributedState &state, Transport &transport, const Gate &gate, const Gate *next,
                            int threads, CommStats *stats, std::int64_t index) {
    check_gate(state, gate);
    if (transport.size() != state.num_ranks()) {
        throw std::invalid_argument("transport has " + std::to_string(transport.size()) + " ranks, state has " +
                                    std::to_string(state.num_ranks()));
    }
    const Layout layout(state);
    CommPlan plan = plan_on(layout, gate, next);
    if (stats) {
        stats->record(plan);
    }
    if (index >= 0) {
        for (Qubit q : gate.qubits()) {
            state.last_use()[q] = index;
        }
    }
    switch (plan.kind) {
        case CommKind::PairExchange:
            run_exchange(state, transport, gate, plan, missing_qubits(layout, gate), threads);
            return;
        case CommKind::Remap:
            for (auto [a, b] : plan.swaps) {
                remap_qubits(state, transport, a, b);
            }
            break;
        case CommKind::Local:
            break;
    }
    if (gate.kind() == GateKind::SWAP) {
        state.swap_labels(gate.qubit(0), gate.qubit(1));
        return;
    }
    for (int rank = 0; rank < state.num_ranks(); ++rank) {
        apply_local(state, rank, gate, threads);
    }
}

StateVector gather(const DistributedState &state, std::uint64_t memory_budget) {
    check_budget(memory_bytes(state.num_qubits()), memory_budget);
    const unsigned n = static_cast<unsigned>(state.num_qubits());
    const unsigned local_bits = state.local_bits();
    std::vector<std::uint64_t> label_bit(n);
    for (unsigned p = 0; p < n; ++p) {
        label_bit[p] = std::uint64_t{1} << state.qubit_at(p);
    }
    StateVector out(n);
    for (int rank = 0; rank < state.num_ranks(); ++rank) {
        std::uint64_t rank_part = 0;
        for (unsigned j = 0; j < state.rank_bits(); ++j) {
            if (static_cast<unsigned>(rank) >> j & 1U) {
                rank_part |= label_bit[local_bits + j];
            }
        }
        std::span<const Complex> block = state.block(rank);
        for (std::uint64_t i = 0; i < block.size(); ++i) {
            std::uint64_t index = rank_part;
            for (std::uint64_t rest = i; rest != 0; rest &= rest - 1) {
                index |= label_bit[static_cast<unsigned>(std::countr_zero(rest))];
            }
            out[index] = block[i];
        }
    }
    return out;
}

DistributedState run_circuit_distributed(const Circuit &circuit, const DistributedOptions &options, CommStats *stats) {
    DistributedState state = partition_state(circuit.num_qubits(), options.ranks, options.memory_budget_per_rank);
    InProcessTransport transport(options.ranks);
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Gate *next = i + 1 < circuit.size() ? &circuit[i + 1] : nullptr;
        apply_gate_distributed(state, transport, circuit[i], next, options.threads, stats, static_cast<std::int64_t>(i));
    }
    return state;
}

namespace {

struct PairMoments {
    double z = 0;
    Complex xy{0, 0};
    PairMoments &operator+=(const PairMoments &o) {
        z += o.z;
        xy += o.xy;
        return *this;
    }
};

}  // namespace

ExpectationReport measure_expectations(DistributedState &state, Transport &transport, int threads, CommStats *stats) {
    ExpectationReport report;
    for (Qubit q = 0; q < state.num_qubits(); ++q) {
        if (state.is_global(q)) {
            // Trade with the least recently used local position.
            const Gate probe = Gate::single(GateKind::H, q);
            std::vector<Qubit> missing{q};
            std::optional<CommPlan> plan = remap_plan(Layout(state), probe, nullptr, missing);
            if (!plan) {
                throw std::logic_error("no local position to receive qubit " + std::to_string(q));
            }
            if (stats) {
                stats->record(*plan);
            }
            remap_qubits(state, transport, plan->swaps[0].first, plan->swaps[0].second);
        }
        const unsigned bit = state.position_of(q);
        const std::uint64_t mask = std::uint64_t{1} << bit;
        PairMoments total;
        for (int rank = 0; rank < state.num_ranks(); ++rank) {
            std::span<const Complex> block = std::as_const(state).block(rank);
            total += kernels::chunked_reduce<PairMoments>(
                static_cast<std::int64_t>(block.size() / 2),
                [&](std::int64_t begin, std::int64_t end) {
                    PairMoments part;
                    for (std::int64_t k = begin; k < end; ++k) {
                        std::uint64_t i0 = kernels::insert_zero_bit(static_cast<std::uint64_t>(k), bit);
                        Complex a0 = block[i0], a1 = block[i0 | mask];
                        part.z += std::norm(a0) - std::norm(a1);
                        part.xy += std::conj(a0) * a1;
                    }
                    return part;
                },
                threads);
        }
        report.qubits.push_back(expectation_from_moments(total.z, total.xy));
    }
    return report;
}

}  // namespace qcsim
