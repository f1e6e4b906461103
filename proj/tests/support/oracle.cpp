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

#include "oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcsim::testing {

std::vector<Complex> reference_matrix(const Gate &gate) {
    const Complex i{0, 1};
    const double h = std::sqrt(0.5);
    const auto p = gate.params();
    auto e = [](double angle) { return std::exp(Complex{0, angle}); };
    switch (gate.kind()) {
        case GateKind::I:
            return {1, 0, 0, 1};
        case GateKind::X:
            return {0, 1, 1, 0};
        case GateKind::Y:
            return {0, -i, i, 0};
        case GateKind::Z:
            return {1, 0, 0, -1};
        case GateKind::H:
            return {h, h, h, -h};
        case GateKind::S:
            return {1, 0, 0, i};
        case GateKind::SDG:
            return {1, 0, 0, -i};
        case GateKind::T:
            return {1, 0, 0, e(std::numbers::pi / 4)};
        case GateKind::TDG:
            return {1, 0, 0, e(-std::numbers::pi / 4)};
        case GateKind::V:  // X^(1/2)
            return {(1.0 + i) / 2.0, (1.0 - i) / 2.0, (1.0 - i) / 2.0, (1.0 + i) / 2.0};
        case GateKind::VY:  // Y^(1/2)
            return {(1.0 + i) / 2.0, -(1.0 + i) / 2.0, (1.0 + i) / 2.0, (1.0 + i) / 2.0};
        case GateKind::RX:
            return {std::cos(p[0] / 2), -i * std::sin(p[0] / 2), -i * std::sin(p[0] / 2), std::cos(p[0] / 2)};
        case GateKind::RY:
            return {std::cos(p[0] / 2), -std::sin(p[0] / 2), std::sin(p[0] / 2), std::cos(p[0] / 2)};
        case GateKind::RZ:
            return {e(-p[0] / 2), 0, 0, e(p[0] / 2)};
        case GateKind::U3:
            return {std::cos(p[0] / 2), -e(p[2]) * std::sin(p[0] / 2), e(p[1]) * std::sin(p[0] / 2),
                    e(p[1] + p[2]) * std::cos(p[0] / 2)};
        case GateKind::DIAG1:
            return {Complex{p[0], p[1]}, 0, 0, Complex{p[2], p[3]}};
        case GateKind::CNOT:  // control qubits()[0]
            return {1, 0, 0, 0,  //
                    0, 0, 0, 1,  //
                    0, 0, 1, 0,  //
                    0, 1, 0, 0};
        case GateKind::CZ:
            return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
        case GateKind::SWAP:
            return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
    }
    throw std::logic_error("unknown gate kind");
}

std::vector<Complex> dense_operator(const Gate &gate, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    const std::vector<Complex> local = reference_matrix(gate);
    const auto qubits = gate.qubits();
    const std::size_t k = qubits.size();
    const std::size_t local_dim = std::size_t{1} << k;
    std::size_t gate_mask = 0;
    for (Qubit q : qubits) {
        gate_mask |= std::size_t{1} << q;
    }
    auto local_index = [&](std::size_t basis) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < k; ++j) {
            idx |= ((basis >> qubits[j]) & 1U) << j;
        }
        return idx;
    };
    std::vector<Complex> op(dim * dim, Complex{0, 0});
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            if ((row & ~gate_mask) != (col & ~gate_mask)) {
                continue;
            }
            op[row * dim + col] = local[local_index(row) * local_dim + local_index(col)];
        }
    }
    return op;
}

std::vector<Complex> dense_run(const Circuit &circuit) {
    const std::size_t dim = std::size_t{1} << circuit.num_qubits();
    std::vector<Complex> state(dim, Complex{0, 0});
    state[0] = 1;
    for (const Gate &g : circuit) {
        const std::vector<Complex> op = dense_operator(g, circuit.num_qubits());
        std::vector<Complex> next(dim, Complex{0, 0});
        for (std::size_t row = 0; row < dim; ++row) {
            Complex acc{0, 0};
            for (std::size_t col = 0; col < dim; ++col) {
                acc += op[row * dim + col] * state[col];
            }
            next[row] = acc;
        }
        state = std::move(next);
    }
    return state;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("size mismatch");
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

Circuit random_circuit(std::size_t n, std::size_t gates, std::uint64_t seed, const RandomCircuitOptions &options) {
    static constexpr GateKind kKinds[] = {
        GateKind::I,  GateKind::X,  GateKind::Y,  GateKind::Z,    GateKind::H,    GateKind::S,  GateKind::SDG,
        GateKind::T,  GateKind::TDG, GateKind::V, GateKind::VY,   GateKind::RX,   GateKind::RY, GateKind::RZ,
        GateKind::U3, GateKind::CNOT, GateKind::CZ, GateKind::SWAP, GateKind::DIAG1};
    SplitMix64 rng(seed);
    Circuit c(n, "random_all_kinds_" + std::to_string(seed));
    auto angle = [&] { return (rng.uniform() * 4 - 2) * std::numbers::pi; };
    while (c.size() < gates) {
        GateKind kind = kKinds[rng.below(std::size(kKinds))];
        const GateInfo &info = gate_info(kind);
        if ((kind == GateKind::DIAG1 && !options.diag1) || (info.arity == 2 && (!options.two_qubit || n < 2))) {
            continue;
        }
        auto a = static_cast<Qubit>(rng.below(n));
        if (info.arity == 2) {
            auto b = static_cast<Qubit>(rng.below(n - 1));
            if (b >= a) {
                ++b;
            }
            c.append(Gate::two(kind, a, b));
        } else if (kind == GateKind::DIAG1) {
            c.append(Gate::diag1(a, std::polar(0.5 + rng.uniform(), angle()), std::polar(0.5 + rng.uniform(), angle())));
        } else if (info.num_params == 1) {
            c.append(Gate::rotation(kind, a, angle()));
        } else if (kind == GateKind::U3) {
            c.append(Gate::u3(a, angle(), angle(), angle()));
        } else {
            c.append(Gate::single(kind, a));
        }
    }
    return c;
}

}  // namespace qcsim::testing
