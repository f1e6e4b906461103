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

#include <cstdint>
#include <utility>
#include <vector>

#include "qcsim/circuit.hpp"

namespace qcsim {

/// H on every qubit.
Circuit gen_uniform_superposition(std::size_t n);

/// H(0), CNOT(0,1), CNOT(1,2), ..., CNOT(n-2,n-1).
Circuit gen_ghz_chain(std::size_t n);

/// Random circuit on a rows x cols qubit grid (qubit = row * cols + col).
///
/// Cycle 0 is a Hadamard on every qubit. Each of the following `depth`
/// cycles applies one CZ tiling from `grid_cz_tilings` (cycling in order,
/// tilings that are empty on this grid are skipped) and a single-qubit gate
/// on every qubit that had a CZ in the previous cycle but has none in this
/// one. That gate is T the first time; afterwards it is drawn with
/// SplitMix64(seed) from {T, V, VY} minus the qubit's previous gate.
/// compute_depth() of the result is at most depth + 1. It is exactly
/// depth + 1 for depth <= 3; deeper cycles whose qubits were idle can share a
/// layer with the previous cycle under ASAP layering (e.g. 1x5 at depth 6).
Circuit gen_random_circuit(std::size_t rows, std::size_t cols, std::size_t depth, std::uint64_t seed);

/// The eight CZ tilings of a rows x cols grid, in cycling order:
/// horizontal classes 0..3 then vertical classes 0..3. A horizontal edge
/// (r,c)-(r,c+1) has class (c + 2*(r%2)) % 4; a vertical edge
/// (r,c)-(r+1,c) has class (r + 2*(c%2)) % 4. Some may be empty on small grids.
std::vector<std::vector<std::pair<Qubit, Qubit>>> grid_cz_tilings(std::size_t rows, std::size_t cols);

}  // namespace qcsim
