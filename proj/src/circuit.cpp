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

#include "qcsim/circuit.hpp"

#include <algorithm>

namespace qcsim {

Circuit::Circuit(std::size_t num_qubits, std::string name) : num_qubits_(num_qubits), name_(std::move(name)) {
    if (num_qubits == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

void Circuit::append(const Gate &gate) {
    for (Qubit q : gate.qubits()) {
        if (q >= num_qubits_) {
            throw std::out_of_range(
                "qubit index " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) +
                " qubits");
        }
    }
    gates_.push_back(gate);
}

std::size_t Circuit::count_two_qubit_gates() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return g.is_two_qubit(); }));
}

LayerSchedule compute_depth(const Circuit &circuit) {
    LayerSchedule schedule;
    std::vector<std::size_t> next_free(circuit.num_qubits(), 0);
    schedule.layer_of_gate.reserve(circuit.size());
    for (std::size_t k = 0; k < circuit.size(); ++k) {
        std::size_t layer = 0;
        for (Qubit q : circuit[k].qubits()) {
            layer = std::max(layer, next_free[q]);
        }
        if (layer == schedule.layers.size()) {
            schedule.layers.emplace_back();
        }
        schedule.layers[layer].push_back(k);
        schedule.layer_of_gate.push_back(layer);
        for (Qubit q : circuit[k].qubits()) {
            next_free[q] = layer + 1;
        }
    }
    return schedule;
}

namespace {

void append_cnot_as_cz(Circuit &out, Qubit control, Qubit target) {
    out.append(Gate::h(target));
    out.append(Gate::cz(control, target));
    out.append(Gate::h(target));
}

}  // namespace

Circuit rewrite_to_cz_basis(const Circuit &circuit) {
    Circuit out(circuit.num_qubits(), circuit.name());
    for (const Gate &g : circuit) {
        switch (g.kind()) {
            case GateKind::CNOT:
                append_cnot_as_cz(out, g.qubit(0), g.qubit(1));
                break;
            case GateKind::SWAP:
                append_cnot_as_cz(out, g.qubit(0), g.qubit(1));
                append_cnot_as_cz(out, g.qubit(1), g.qubit(0));
                append_cnot_as_cz(out, g.qubit(0), g.qubit(1));
                break;
            default:
                out.append(g);
        }
    }
    return out;
}

}  // namespace qcsim
