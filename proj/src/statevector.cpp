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

#include "qcsim/statevector.hpp"

#include <algorithm>
#include <cmath>

#include "qcsim/kernels.hpp"
#include "qcsim/rng.hpp"

namespace qcsim {

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > 62) {
        throw std::length_error("state vector of " + std::to_string(num_qubits) + " qubits is not addressable");
    }
    amps_.assign(std::size_t{1} << num_qubits, Complex{0, 0});
    amps_[0] = 1;
}

StateVector StateVector::from_amplitudes(std::size_t num_qubits, std::span<const Complex> amps) {
    if (amps.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude count does not match 2^N");
    }
    StateVector s(num_qubits);
    std::copy(amps.begin(), amps.end(), s.amps_.begin());
    return s;
}

double StateVector::norm_squared(int threads) const {
    return kernels::chunked_reduce<double>(
        static_cast<std::int64_t>(amps_.size()),
        [&](std::int64_t begin, std::int64_t end) {
            double sum = 0;
            for (std::int64_t i = begin; i < end; ++i) {
                sum += std::norm(amps_[static_cast<std::size_t>(i)]);
            }
            return sum;
        },
        threads);
}

StateVector init_state(std::size_t n, std::uint64_t memory_budget) {
    if (n < 1) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    if (n > 59) {
        throw MemoryBudgetError(~std::uint64_t{0}, memory_budget);
    }
    check_budget(memory_bytes(n), memory_budget);
    return StateVector(n);
}

void apply_gate(StateVector &state, const Gate &gate, int threads) {
    unsigned bits[2] = {0, 0};
    for (std::size_t k = 0; k < gate.arity(); ++k) {
        if (gate.qubit(k) >= state.num_qubits()) {
            throw std::out_of_range(
                "gate " + to_string(gate) + " outside " + std::to_string(state.num_qubits()) + "-qubit state");
        }
        bits[k] = gate.qubit(k);
    }
    kernels::apply_gate(state.amplitudes(), gate, std::span<const unsigned>(bits, gate.arity()), threads);
}

StateVector run_circuit(const Circuit &circuit, const ExecOptions &options) {
    StateVector state = init_state(circuit.num_qubits(), options.memory_budget);
    for (const Gate &g : circuit) {
        apply_gate(state, g, options.threads);
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

void check_qubit(const StateVector &state, Qubit q) {
    if (q >= state.num_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(q) + " outside " + std::to_string(state.num_qubits()) +
                                "-qubit state");
    }
}

}  // namespace

QubitExpectation expectation_from_moments(double z_moment, Complex xy_moment) {
    return {(1 - 2 * xy_moment.real()) / 2, (1 - 2 * xy_moment.imag()) / 2, (1 - z_moment) / 2};
}

QubitExpectation expectation_all_axes(const StateVector &state, Qubit q, int threads) {
    check_qubit(state, q);
    auto amps = state.amplitudes();
    const std::uint64_t mask = std::uint64_t{1} << q;
    PairMoments m = kernels::chunked_reduce<PairMoments>(
        static_cast<std::int64_t>(amps.size() / 2),
        [&](std::int64_t begin, std::int64_t end) {
            PairMoments part;
            for (std::int64_t k = begin; k < end; ++k) {
                std::uint64_t i0 = kernels::insert_zero_bit(static_cast<std::uint64_t>(k), q);
                Complex a0 = amps[i0], a1 = amps[i0 | mask];
                part.z += std::norm(a0) - std::norm(a1);
                part.xy += std::conj(a0) * a1;
            }
            return part;
        },
        threads);
    return expectation_from_moments(m.z, m.xy);
}

double expectation(const StateVector &state, Axis axis, Qubit q, int threads) {
    QubitExpectation e = expectation_all_axes(state, q, threads);
    switch (axis) {
        case Axis::X:
            return e.x;
        case Axis::Y:
            return e.y;
        case Axis::Z:
            return e.z;
    }
    return e.z;
}

ExpectationReport measure_expectations(const StateVector &state, int threads) {
    ExpectationReport report;
    for (Qubit q = 0; q < state.num_qubits(); ++q) {
        report.qubits.push_back(expectation_all_axes(state, q, threads));
    }
    return report;
}

Complex amplitude(const StateVector &state, const Bitstring &bits) {
    if (bits.width() != state.num_qubits()) {
        throw std::invalid_argument(
            "bitstring has " + std::to_string(bits.width()) + " bits, state has " +
            std::to_string(state.num_qubits()) + " qubits");
    }
    return state[bits.to_index()];
}

Complex amplitude(const StateVector &state, std::string_view bits) {
    return amplitude(state, Bitstring::from_string(bits));
}

std::map<std::string, std::uint64_t> sample(const StateVector &state, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("sample needs at least one shot");
    }
    double norm = state.norm_squared();
    if (std::abs(norm - 1) > 1e-6) {
        throw std::domain_error("cannot sample an unnormalized state (norm^2 = " + std::to_string(norm) + ")");
    }
    std::vector<double> cumulative(state.size());
    double running = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        running += std::norm(state[i]);
        cumulative[i] = running;
    }
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (std::norm(state[i]) != 0) {
            last_nonzero = i;
        }
    }
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> counts(state.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        double u = rng.uniform() * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        // u can round up to the total; the last populated index owns that edge.
        std::size_t index = it == cumulative.end() ? last_nonzero : static_cast<std::size_t>(it - cumulative.begin());
        ++counts[index];
    }
    std::map<std::string, std::uint64_t> histogram;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] != 0) {
            histogram.emplace(format_bits(i, state.num_qubits()), counts[i]);
        }
    }
    return histogram;
}

}  // namespace qcsim
