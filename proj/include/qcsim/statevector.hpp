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

#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "qcsim/circuit.hpp"
#include "qcsim/memory.hpp"

namespace qcsim {

/// 2^N complex amplitudes; bit k of an index is the value of qubit k.
class StateVector {
   public:
    /// |0...0>. Does not consult a memory budget; see init_state().
    explicit StateVector(std::size_t num_qubits);

    static StateVector from_amplitudes(std::size_t num_qubits, std::span<const Complex> amps);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t size() const noexcept {
        return amps_.size();
    }
    std::span<Complex> amplitudes() noexcept {
        return amps_;
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    Complex &operator[](std::size_t i) {
        return amps_[i];
    }
    const Complex &operator[](std::size_t i) const {
        return amps_[i];
    }
    /// Bytes held by the amplitude array.
    std::size_t storage_bytes() const noexcept {
        return amps_.capacity() * sizeof(Complex);
    }
    double norm_squared(int threads = 1) const;

   private:
    std::size_t num_qubits_;
    tracked_vector<Complex> amps_;
};

enum class Axis { X, Y, Z };

struct ExecOptions {
    int threads = 1;
    std::uint64_t memory_budget = kDefaultMemoryBudget;
};

/// Refuses (MemoryBudgetError) when memory_bytes(n) exceeds the budget.
StateVector init_state(std::size_t n, std::uint64_t memory_budget = kDefaultMemoryBudget);

/// In place. Throws std::out_of_range for qubits outside the state.
void apply_gate(StateVector &state, const Gate &gate, int threads = 1);

StateVector run_circuit(const Circuit &circuit, const ExecOptions &options = {});

/// <Q_axis(q)> = (1 - <sigma_axis(q)>) / 2 with
///   <sigma_z> = sum_{bit q = 0} |a|^2 - sum_{bit q = 1} |a|^2
///   <sigma_x> = 2 Re sum conj(a_{q=0}) a_{q=1}
///   <sigma_y> = 2 Im sum conj(a_{q=0}) a_{q=1}
/// (sigma_y = [[0,-i],[i,0]]).
double expectation(const StateVector &state, Axis axis, Qubit q, int threads = 1);

struct QubitExpectation {
    double x = 0;
    double y = 0;
    double z = 0;
};

struct ExpectationReport {
    std::vector<QubitExpectation> qubits;
};

/// All three axes of one qubit from a single pass over the state.
QubitExpectation expectation_all_axes(const StateVector &state, Qubit q, int threads = 1);
ExpectationReport measure_expectations(const StateVector &state, int threads = 1);

/// Combines the pair sums (sum of |a0|^2 - |a1|^2, sum of conj(a0) a1) into Q values.
QubitExpectation expectation_from_moments(double z_moment, Complex xy_moment);

Complex amplitude(const StateVector &state, const Bitstring &bits);
Complex amplitude(const StateVector &state, std::string_view bits);

/// Multinomial draws from |a_i|^2 using SplitMix64(seed). Keys are bitstrings.
/// Throws if shots == 0 or the norm deviates from 1 by more than 1e-6.
std::map<std::string, std::uint64_t> sample(const StateVector &state, std::uint64_t shots, std::uint64_t seed);

/// Binary dump: 16-byte little-endian header (u32 magic "QCSV", u32 version,
/// u64 N) followed by 2^N (re, im) pairs of little-endian doubles.
void write_state_dump(std::ostream &out, const StateVector &state);
StateVector read_state_dump(std::istream &in);

}  // namespace qcsim
