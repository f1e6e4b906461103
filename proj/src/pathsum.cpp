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

#include "qcsim/pathsum.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

namespace qcsim {

std::size_t PartitionPlan::max_width() const noexcept {
    std::size_t width = 0;
    for (const auto &p : partitions) {
        width = std::max(width, p.size());
    }
    return width;
}

PartitionPlan make_partition_plan(const Circuit &circuit, std::vector<std::vector<Qubit>> blocks) {
    const std::size_t n = circuit.num_qubits();
    if (blocks.empty()) {
        throw std::invalid_argument("partition needs at least one block");
    }
    constexpr auto kUnassigned = static_cast<std::size_t>(-1);
    PartitionPlan plan;
    plan.num_qubits = n;
    plan.partition_of.assign(n, kUnassigned);
    plan.local_index.assign(n, 0);
    for (std::size_t p = 0; p < blocks.size(); ++p) {
        auto &block = blocks[p];
        if (block.empty()) {
            throw std::invalid_argument("partition block " + std::to_string(p) + " is empty");
        }
        std::sort(block.begin(), block.end());
        for (std::size_t k = 0; k < block.size(); ++k) {
            Qubit q = block[k];
            if (q >= n) {
                throw std::invalid_argument(
                    "partition block " + std::to_string(p) + " names qubit " + std::to_string(q) + " of a " +
                    std::to_string(n) + "-qubit circuit");
            }
            if (plan.partition_of[q] != kUnassigned) {
                throw std::invalid_argument("qubit " + std::to_string(q) + " appears in more than one block");
            }
            plan.partition_of[q] = p;
            plan.local_index[q] = static_cast<unsigned>(k);
        }
        plan.subspace_dims.push_back(std::ldexp(1.0, static_cast<int>(block.size())));
    }
    for (Qubit q = 0; q < n; ++q) {
        if (plan.partition_of[q] == kUnassigned) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " is in no block");
        }
    }
    plan.partitions = std::move(blocks);
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Gate &g = circuit[i];
        if (!g.is_two_qubit()) {
            continue;
        }
        if (g.kind() != GateKind::CZ) {
            throw std::invalid_argument("gate " + std::to_string(i) + " (" + to_string(g) +
                                        ") is not CZ; rewrite the circuit to the CZ basis first");
        }
        if (plan.partition_of[g.qubit(0)] != plan.partition_of[g.qubit(1)]) {
            plan.cut_gates.push_back(i);
        }
    }
    return plan;
}

Complex cz_path_angle() {
    return {std::numbers::pi / 4, -0.5 * std::log(1 + std::numbers::sqrt2)};
}

std::array<Complex, 2> cz_path_diagonal(int s) {
    if (s != 1 && s != -1) {
        throw std::invalid_argument("path value must be +1 or -1, got " + std::to_string(s));
    }
    const Complex phase = Complex{0, 1} * (cz_path_angle() * static_cast<double>(s) - std::numbers::pi / 4);
    return {std::exp(phase), std::exp(-phase)};
}

std::pair<Gate, Gate> cz_path_gates(int s, Qubit a, Qubit b) {
    auto d = cz_path_diagonal(s);
    return {Gate::diag1(a, d[0], d[1]), Gate::diag1(b, d[0], d[1])};
}

std::vector<Subcircuit> split_circuit(const Circuit &circuit, const PartitionPlan &plan,
                                      std::span<const int> assignment) {
    if (assignment.size() != plan.S()) {
        throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) + " values for " +
                                    std::to_string(plan.S()) + " cut gates");
    }
    if (circuit.num_qubits() != plan.num_qubits) {
        throw std::invalid_argument("partition plan was built for a different circuit");
    }
    std::vector<Subcircuit> subs;
    for (std::size_t p = 0; p < plan.partitions.size(); ++p) {
        subs.push_back({p, plan.partitions[p], Circuit(plan.partitions[p].size(), "W" + std::to_string(p))});
    }
    auto place = [&](const Gate &g) {
        const std::size_t p = plan.partition_of[g.qubit(0)];
        std::array<Qubit, 2> local{};
        for (std::size_t k = 0; k < g.arity(); ++k) {
            local[k] = plan.local_index[g.qubit(k)];
        }
        subs[p].circuit.append(g.with_qubits(std::span<const Qubit>(local.data(), g.arity())));
    };
    std::size_t next_cut = 0;
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Gate &g = circuit[i];
        if (next_cut < plan.cut_gates.size() && plan.cut_gates[next_cut] == i) {
            auto [ga, gb] = cz_path_gates(assignment[next_cut], g.qubit(0), g.qubit(1));
            place(ga);
            place(gb);
            ++next_cut;
            continue;
        }
        if (g.is_two_qubit() && plan.partition_of[g.qubit(0)] != plan.partition_of[g.qubit(1)]) {
            throw std::invalid_argument("gate " + std::to_string(i) + " crosses blocks but is not a planned cut");
        }
        place(g);
    }
    return subs;
}

std::vector<Complex> eval_subcircuit(const Subcircuit &sub, std::span<const std::uint64_t> targets,
                                     const ExecOptions &options) {
    const std::size_t width = sub.circuit.num_qubits();
    for (std::uint64_t t : targets) {
        if (width < 64 && t >> width != 0) {
            throw std::invalid_argument("target " + std::to_string(t) + " is wider than the " + std::to_string(width) +
                                        "-qubit partition");
        }
    }
    StateVector state = run_circuit(sub.circuit, options);
    std::vector<Complex> out;
    out.reserve(targets.size());
    for (std::uint64_t t : targets) {
        out.push_back(state[t]);
    }
    return out;
}

namespace {

/// Pairwise sum of equally long vectors in a fixed binary tree over the
/// order they are added (a binary counter of partial sums).
class TreeSum {
   public:
    explicit TreeSum(std::size_t width) : width_(width) {
    }

    void add(std::vector<Complex> leaf) {
        for (std::size_t level = 0;; ++level) {
            if (level == levels_.size()) {
                levels_.emplace_back();
            }
            if (levels_[level].empty()) {
                levels_[level] = std::move(leaf);
                return;
            }
            for (std::size_t m = 0; m < width_; ++m) {
                leaf[m] = levels_[level][m] + leaf[m];
            }
            levels_[level].clear();
        }
    }

    /// Remaining partial sums, combined from the highest (earliest) down.
    std::vector<Complex> finish() && {
        std::vector<Complex> total;
        for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
            if (it->empty()) {
                continue;
            }
            if (total.empty()) {
                total = std::move(*it);
            } else {
                for (std::size_t m = 0; m < width_; ++m) {
                    total[m] += (*it)[m];
                }
            }
        }
        if (total.empty()) {
            total.assign(width_, Complex{0, 0});
        }
        return total;
    }

   private:
    std::size_t width_;
    std::vector<std::vector<Complex>> levels_;
};

}  // namespace

std::vector<Complex> compute_amplitudes(const Circuit &circuit, const PartitionPlan &plan,
                                        const CoefficientRequest &request, const PathSumOptions &options,
                                        PathSumStats *stats) {
    const std::size_t n = circuit.num_qubits();
    const std::size_t m_count = request.targets.size();
    if (m_count == 0) {
        throw std::invalid_argument("at least one coefficient must be requested");
    }
    if (plan.num_qubits != n) {
        throw std::invalid_argument("partition plan was built for a different circuit");
    }
    for (const Bitstring &z : request.targets) {
        if (z.width() != n) {
            throw std::invalid_argument("target " + z.to_string() + " has width " + std::to_string(z.width()) +
                                        ", circuit has " + std::to_string(n) + " qubits");
        }
    }
    if (options.ranks < 1 || !std::has_single_bit(static_cast<unsigned>(options.ranks))) {
        throw std::invalid_argument("rank count " + std::to_string(options.ranks) + " is not a power of two");
    }
    const std::size_t S = plan.S();
    if (S > 62) {
        throw std::invalid_argument(std::to_string(S) + " cut gates give more paths than can be enumerated");
    }
    if (plan.max_width() > 62) {
        throw MemoryBudgetError(~std::uint64_t{0}, options.memory_budget);
    }
    check_budget(memory_bytes(plan.max_width()), options.memory_budget);

    // Distinct partition-local targets, and where each request lands in them.
    const std::size_t P = plan.partitions.size();
    std::vector<std::vector<std::uint64_t>> local_targets(P);
    std::vector<std::vector<std::size_t>> slot(P, std::vector<std::size_t>(m_count));
    for (std::size_t p = 0; p < P; ++p) {
        std::vector<std::uint64_t> raw(m_count);
        for (std::size_t m = 0; m < m_count; ++m) {
            std::uint64_t t = 0;
            for (std::size_t k = 0; k < plan.partitions[p].size(); ++k) {
                if (request.targets[m].get(plan.partitions[p][k])) {
                    t |= std::uint64_t{1} << k;
                }
            }
            raw[m] = t;
        }
        local_targets[p] = raw;
        std::sort(local_targets[p].begin(), local_targets[p].end());
        local_targets[p].erase(std::unique(local_targets[p].begin(), local_targets[p].end()), local_targets[p].end());
        for (std::size_t m = 0; m < m_count; ++m) {
            slot[p][m] = static_cast<std::size_t>(
                std::lower_bound(local_targets[p].begin(), local_targets[p].end(), raw[m]) - local_targets[p].begin());
        }
    }

    const std::uint64_t paths = std::uint64_t{1} << S;
    const std::uint64_t ranks = std::min<std::uint64_t>(static_cast<std::uint64_t>(options.ranks), paths);
    const std::uint64_t per_rank = paths / ranks;
    const ExecOptions exec{options.threads, options.memory_budget};
    std::atomic<std::uint64_t> enumerated{0}, evaluations{0};

    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        TreeSum sum(m_count);
        std::vector<int> assignment(S);
        for (std::uint64_t path = begin; path < end; ++path) {
            for (std::size_t k = 0; k < S; ++k) {
                assignment[k] = (path >> k & 1U) ? -1 : 1;
            }
            std::vector<Subcircuit> subs = split_circuit(circuit, plan, assignment);
            std::vector<Complex> product(m_count, Complex{1, 0});
            for (std::size_t p = 0; p < P; ++p) {
                std::vector<Complex> coeffs = eval_subcircuit(subs[p], local_targets[p], exec);
                ++evaluations;
                for (std::size_t m = 0; m < m_count; ++m) {
                    product[m] *= coeffs[slot[p][m]];
                }
            }
            ++enumerated;
            sum.add(std::move(product));
        }
        return std::move(sum).finish();
    };

    std::vector<std::vector<Complex>> rank_sums(ranks);
    if (ranks == 1) {
        rank_sums[0] = run_range(0, paths);
    } else {
        std::vector<std::exception_ptr> errors(ranks);
        {
            std::vector<std::jthread> workers;
            for (std::uint64_t r = 0; r < ranks; ++r) {
                workers.emplace_back([&, r] {
                    try {
                        rank_sums[r] = run_range(r * per_rank, (r + 1) * per_rank);
                    } catch (...) {
                        errors[r] = std::current_exception();
                    }
                });
            }
        }
        for (auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }
    // Rank ranges are aligned subtrees, so finishing the tree over them
    // reproduces the single-rank order.
    TreeSum total(m_count);
    for (auto &s : rank_sums) {
        total.add(std::move(s));
    }
    std::vector<Complex> amplitudes = std::move(total).finish();
    const double prefactor = std::ldexp(1.0, -static_cast<int>(S));
    for (Complex &a : amplitudes) {
        a *= prefactor;
    }
    if (stats) {
        stats->paths_enumerated += enumerated;
        stats->subcircuit_evaluations += evaluations;
    }
    return amplitudes;
}

CostEstimate cost_estimate(const PartitionPlan &plan, std::size_t m, int ranks, int threads) {
    if (m < 1 || ranks < 1 || threads < 1) {
        throw std::invalid_argument("cost estimate needs M, R, T >= 1");
    }
    double d_max = 0;
    for (double d : plan.subspace_dims) {
        d_max = std::max(d_max, d);
    }
    const double width = std::max(d_max, static_cast<double>(m));
    CostEstimate cost;
    cost.time_units = std::ldexp(1.0, static_cast<int>(plan.S())) * static_cast<double>(plan.partitions.size()) *
                      width / (static_cast<double>(ranks) * threads);
    cost.space_units = static_cast<double>(ranks) * width;
    return cost;
}

}  // namespace qcsim
