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

#include <string>
#include <vector>

#include "qcsim/gate.hpp"

namespace qcsim {

/// An ordered gate list over `num_qubits()` qubits. Gate order is execution
/// order. The name is informational and not part of equality.
class Circuit {
   public:
    using const_iterator = std::vector<Gate>::const_iterator;

    explicit Circuit(std::size_t num_qubits, std::string name = {});

    /// Appends a gate; throws std::out_of_range if it touches a qubit >= num_qubits().
    void append(const Gate &gate);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    std::size_t size() const noexcept {
        return gates_.size();
    }
    bool empty() const noexcept {
        return gates_.empty();
    }
    const Gate &operator[](std::size_t k) const {
        return gates_[k];
    }
    const_iterator begin() const noexcept {
        return gates_.begin();
    }
    const_iterator end() const noexcept {
        return gates_.end();
    }
    const std::string &name() const noexcept {
        return name_;
    }
    void set_name(std::string name) {
        name_ = std::move(name);
    }

    std::size_t count_two_qubit_gates() const;

    bool operator==(const Circuit &other) const {
        return num_qubits_ == other.num_qubits_ && gates_ == other.gates_;
    }

   private:
    std::size_t num_qubits_;
    std::vector<Gate> gates_;
    std::string name_;
};

/// Greedy as-soon-as-possible layering.
struct LayerSchedule {
    std::vector<std::vector<std::size_t>> layers;  // gate indices per layer
    /// Layer index of each gate.
    std::vector<std::size_t> layer_of_gate;

    std::size_t depth() const noexcept {
        return layers.size();
    }
};

/// Each gate lands one layer after the latest layer that touched any of its qubits.
LayerSchedule compute_depth(const Circuit &circuit);

/// Expresses every entangling gate through single-qubit gates and CZ:
/// CNOT(a,b) -> H(b) CZ(a,b) H(b), SWAP -> three CNOTs, each rewritten.
Circuit rewrite_to_cz_basis(const Circuit &circuit);

}  // namespace qcsim
