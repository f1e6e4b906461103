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

#include "qcsim/generators.hpp"

#include <string>

#include "qcsim/rng.hpp"

namespace qcsim {

Circuit gen_uniform_superposition(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("uniform superposition needs at least 1 qubit");
    }
    Circuit c(n, "uniform_" + std::to_string(n));
    for (std::size_t q = 0; q < n; ++q) {
        c.append(Gate::h(static_cast<Qubit>(q)));
    }
    return c;
}

Circuit gen_ghz_chain(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("GHZ chain needs at least 2 qubits");
    }
    Circuit c(n, "ghz_" + std::to_string(n));
    c.append(Gate::h(0));
    for (std::size_t q = 0; q + 1 < n; ++q) {
        c.append(Gate::cnot(static_cast<Qubit>(q), static_cast<Qubit>(q + 1)));
    }
    return c;
}

std::vector<std::vector<std::pair<Qubit, Qubit>>> grid_cz_tilings(std::size_t rows, std::size_t cols) {
    std::vector<std::vector<std::pair<Qubit, Qubit>>> tilings(8);
    auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Qubit>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c + 1 < cols; ++c) {
            tilings[(c + 2 * (r % 2)) % 4].emplace_back(id(r, c), id(r, c + 1));
        }
    }
    for (std::size_t r = 0; r + 1 < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            tilings[4 + (r + 2 * (c % 2)) % 4].emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return tilings;
}

Circuit gen_random_circuit(std::size_t rows, std::size_t cols, std::size_t depth, std::uint64_t seed) {
    if (rows * cols < 2) {
        throw std::invalid_argument("random circuit grid needs at least 2 qubits");
    }
    if (depth < 1) {
        throw std::invalid_argument("random circuit depth must be at least 1");
    }
    auto tilings = grid_cz_tilings(rows, cols);
    std::erase_if(tilings, [](const auto &t) { return t.empty(); });
    if (tilings.empty()) {
        throw std::invalid_argument("grid too small for any CZ pattern");
    }

    const std::size_t n = rows * cols;
    Circuit c(n, "random_" + std::to_string(rows) + "x" + std::to_string(cols) + "_d" + std::to_string(depth) +
                     "_s" + std::to_string(seed));
    for (std::size_t q = 0; q < n; ++q) {
        c.append(Gate::h(static_cast<Qubit>(q)));
    }

    SplitMix64 rng(seed);
    constexpr GateKind kChoices[3] = {GateKind::T, GateKind::V, GateKind::VY};
    std::vector<std::optional<GateKind>> last_single(n);
    std::vector<char> had_cz(n, 0), has_cz(n, 0);
    for (std::size_t cycle = 0; cycle < depth; ++cycle) {
        const auto &tiling = tilings[cycle % tilings.size()];
        std::fill(has_cz.begin(), has_cz.end(), 0);
        for (auto [a, b] : tiling) {
            c.append(Gate::cz(a, b));
            has_cz[a] = has_cz[b] = 1;
        }
        for (std::size_t q = 0; q < n; ++q) {
            if (!had_cz[q] || has_cz[q]) {
                continue;
            }
            GateKind kind = GateKind::T;
            if (last_single[q]) {
                GateKind options[2];
                std::size_t k = 0;
                for (GateKind g : kChoices) {
                    if (g != *last_single[q]) {
                        options[k++] = g;
                    }
                }
                kind = options[rng.below(2)];
            }
            c.append(Gate::single(kind, static_cast<Qubit>(q)));
            last_single[q] = kind;
        }
        had_cz.swap(has_cz);
    }
    return c;
}

}  // namespace qcsim
