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

#include <gtest/gtest.h>

#include <set>

#include "qcsim/generators.hpp"

namespace qcsim {
namespace {

using Edge = std::pair<Qubit, Qubit>;

Edge normalized(Qubit a, Qubit b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

bool adjacent(Qubit a, Qubit b, std::size_t cols) {
    auto [lo, hi] = normalized(a, b);
    return (hi - lo == 1 && lo / cols == hi / cols) || hi - lo == cols;
}

TEST(Generators, UniformSuperposition) {
    Circuit c = gen_uniform_superposition(4);
    ASSERT_EQ(c.size(), 4u);
    for (Qubit q = 0; q < 4; ++q) {
        EXPECT_EQ(c[q], Gate::h(q));
    }
}

TEST(Generators, GhzChain) {
    Circuit c = gen_ghz_chain(4);
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c[0], Gate::h(0));
    EXPECT_EQ(c[1], Gate::cnot(0, 1));
    EXPECT_EQ(c[2], Gate::cnot(1, 2));
    EXPECT_EQ(c[3], Gate::cnot(2, 3));
    EXPECT_THROW(gen_ghz_chain(1), std::invalid_argument);
}

TEST(Generators, SmallestRandomCircuit) {
    Circuit c = gen_random_circuit(1, 2, 1, 7);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], Gate::h(0));
    EXPECT_EQ(c[1], Gate::h(1));
    EXPECT_EQ(c[2], Gate::cz(0, 1));
}

TEST(Generators, TilingsPartitionGridEdges) {
    for (std::size_t rows = 1; rows <= 6; ++rows) {
        for (std::size_t cols = 1; cols <= 7; ++cols) {
            auto tilings = grid_cz_tilings(rows, cols);
            ASSERT_EQ(tilings.size(), 8u);
            std::set<Edge> seen;
            for (std::size_t t = 0; t < tilings.size(); ++t) {
                std::set<Qubit> used;
                for (auto [a, b] : tilings[t]) {
                    ASSERT_TRUE(adjacent(a, b, cols)) << a << "," << b;
                    EXPECT_TRUE(used.insert(a).second) << "qubit twice in one tiling";
                    EXPECT_TRUE(used.insert(b).second) << "qubit twice in one tiling";
                    EXPECT_TRUE(seen.insert(normalized(a, b)).second) << "edge in two tilings";
                    // class formula
                    auto [lo, hi] = normalized(a, b);
                    std::size_t r = lo / cols, col = lo % cols;
                    if (hi - lo == 1 && lo / cols == hi / cols) {
                        EXPECT_EQ(t, (col + 2 * (r % 2)) % 4);
                    } else {
                        EXPECT_EQ(t, 4 + (r + 2 * (col % 2)) % 4);
                    }
                }
            }
            std::size_t edges = rows * (cols - 1) + (rows - 1) * cols;
            EXPECT_EQ(seen.size(), edges) << rows << "x" << cols;
        }
    }
}

TEST(Generators, RandomCircuitStructure) {
    for (std::size_t rows = 1; rows <= 5; ++rows) {
        for (std::size_t cols = 2; cols <= 6; ++cols) {
            for (std::size_t depth : {1u, 3u, 8u, 17u}) {
                const std::uint64_t seed = rows * 1000 + cols * 10 + depth;
                Circuit c = gen_random_circuit(rows, cols, depth, seed);
                ASSERT_EQ(c.num_qubits(), rows * cols);
                // later cycles can slide into idle layers, so only shallow circuits are exact
                const std::size_t layers = compute_depth(c).depth();
                EXPECT_LE(layers, depth + 1) << rows << "x" << cols << " depth " << depth;
                if (depth <= 3) {
                    EXPECT_EQ(layers, depth + 1) << rows << "x" << cols << " depth " << depth;
                }
                for (std::size_t k = 0; k < rows * cols; ++k) {
                    EXPECT_EQ(c[k], Gate::h(static_cast<Qubit>(k)));
                }
                std::vector<int> previous(rows * cols, -1);
                for (std::size_t k = rows * cols; k < c.size(); ++k) {
                    const Gate &g = c[k];
                    if (g.is_two_qubit()) {
                        ASSERT_EQ(g.kind(), GateKind::CZ);
                        ASSERT_TRUE(adjacent(g.qubit(0), g.qubit(1), cols));
                        continue;
                    }
                    ASSERT_TRUE(g.kind() == GateKind::T || g.kind() == GateKind::V || g.kind() == GateKind::VY)
                        << to_string(g);
                    int &prev = previous[g.qubit(0)];
                    if (prev < 0) {
                        EXPECT_EQ(g.kind(), GateKind::T) << "first gate after H";
                    } else {
                        EXPECT_NE(static_cast<int>(g.kind()), prev) << "repeated gate";
                    }
                    prev = static_cast<int>(g.kind());
                }
            }
        }
    }
}

TEST(Generators, RandomCircuitIsPureFunction) {
    EXPECT_EQ(gen_random_circuit(4, 5, 20, 11), gen_random_circuit(4, 5, 20, 11));
    EXPECT_NE(gen_random_circuit(4, 5, 20, 11), gen_random_circuit(4, 5, 20, 12));
    EXPECT_THROW(gen_random_circuit(2, 2, 0, 1), std::invalid_argument);
}

TEST(Generators, SixBySevenGateCounts) {
    std::size_t at10 = gen_random_circuit(6, 7, 10, 1).size();
    std::size_t at25 = gen_random_circuit(6, 7, 25, 1).size();
    EXPECT_LT(at10, at25);
    // same order of magnitude as published grids of this size
    EXPECT_GE(at10, 100u);
    EXPECT_LE(at25, 2000u);
}

}  // namespace
}  // namespace qcsim
