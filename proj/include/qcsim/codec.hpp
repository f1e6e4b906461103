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

#include <array>
#include <iosfwd>
#include <optional>
#include <span>

#include "qcsim/statevector.hpp"

namespace qcsim {

class CorruptCodeError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// One amplitude in two bytes: a code for the real part and one for the
/// imaginary part, both indices into the state's Codebook.
struct Cell {
    std::uint8_t re = 0;
    std::uint8_t im = 0;
    bool operator==(const Cell &) const = default;
};
static_assert(sizeof(Cell) == 2);

/// Table of reals addressed by byte codes. Code 0 is exact zero; codes
/// 1..size() hold the table values in ascending order. The table is always
/// symmetric (v present iff -v present), so sign flips and multiplication
/// by +-i are pure code permutations.
class Codebook {
   public:
    /// Distinct nonzero values a table can hold.
    static constexpr std::size_t kCapacity = 255;
    /// Distinct magnitudes (each stored as a +- pair).
    static constexpr std::size_t kMaxMagnitudes = 127;

    Codebook() = default;

    /// Builds the table {-m_k, ..., -m_1, m_1, ..., m_k} from strictly
    /// increasing positive magnitudes.
    static Codebook from_magnitudes(std::span<const double> magnitudes);

    std::size_t size() const noexcept {
        return values_.size();
    }
    std::span<const double> values() const noexcept {
        return values_;
    }
    /// Throws CorruptCodeError for codes past the end of the table.
    double decode(std::uint8_t code) const;
    /// Unchecked lookup for kernels; unset codes read as 0.
    double lookup(std::uint8_t code) const noexcept {
        return decode_table_[code];
    }
    std::uint8_t negate(std::uint8_t code) const noexcept {
        return code == 0 ? 0 : static_cast<std::uint8_t>(values_.size() + 1 - code);
    }
    std::optional<std::uint8_t> find_exact(double value) const;
    std::uint8_t encode_nearest(double value) const;
    /// Half the distance between the two table values (zero included) that
    /// bracket `value`; infinity outside the table's range.
    double half_gap_at(double value) const;
    /// Largest distance between adjacent table values, zero included.
    double max_gap() const;

    /// Number of values ever added across rebuilds of this state's table.
    std::uint64_t insertion_count() const noexcept {
        return insertion_count_;
    }
    /// Set once any state held more distinct values than the table can code.
    bool saturated() const noexcept {
        return saturated_;
    }
    /// Carries the lifetime counters of `previous` into this table.
    void inherit_history(const Codebook &previous, bool now_saturated);

   private:
    std::vector<double> values_;
    std::array<double, 256> decode_table_{};
    std::uint64_t insertion_count_ = 0;
    bool saturated_ = false;
};

/// Instrumentation for lossy re-encoding.
struct CodecStats {
    std::uint64_t lossy_encodes = 0;     // parts that were rounded to a table value
    double max_rounding_error = 0;       // largest |value - table value|
    std::uint64_t bound_violations = 0;  // roundings larger than half the bracketing gap
};

CodecStats &operator+=(CodecStats &a, const CodecStats &b);

/// 2^N cells plus a shared codebook; 2^(N+1) bytes of code storage.
class EncodedState {
   public:
    /// |0...0> (table {-1, 1}).
    explicit EncodedState(std::size_t num_qubits);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t size() const noexcept {
        return cells_.size();
    }
    std::span<Cell> cells() noexcept {
        return cells_;
    }
    std::span<const Cell> cells() const noexcept {
        return cells_;
    }
    const Codebook &codebook() const noexcept {
        return book_;
    }
    void set_codebook(Codebook book) {
        book_ = std::move(book);
    }
    Complex decode_at(std::size_t i) const noexcept {
        const Cell c = cells_[i];
        return {book_.lookup(c.re), book_.lookup(c.im)};
    }
    std::size_t code_storage_bytes() const noexcept {
        return cells_.capacity() * sizeof(Cell);
    }

   private:
    std::size_t num_qubits_;
    tracked_vector<Cell> cells_;
    Codebook book_;
};

/// Lossless when the state's real and imaginary parts take at most
/// Codebook::kMaxMagnitudes distinct magnitudes; otherwise every part is
/// rounded to the nearest value of a table fitted to the state.
EncodedState encode_state(const StateVector &state, int threads = 1, CodecStats *stats = nullptr);

/// Exact table lookup per part. Throws CorruptCodeError on unset codes.
StateVector decode_state(const EncodedState &state);

/// Permutation and sign gates (I, X, Y, Z, S, SDG, CZ, CNOT, SWAP) move codes
/// without decoding. Every other gate decodes each index pair, applies the
/// exact 2x2 kernel and re-encodes against a table rebuilt from the new
/// amplitudes, in three deterministic passes (collect values, optionally
/// histogram them, encode).
void apply_gate_encoded(EncodedState &state, const Gate &gate, int threads = 1, CodecStats *stats = nullptr);

/// Refuses when the 2^(N+1)-byte code array exceeds the budget.
EncodedState init_encoded_state(std::size_t n, std::uint64_t memory_budget = kDefaultMemoryBudget);
EncodedState run_circuit_encoded(const Circuit &circuit, const ExecOptions &options = {},
                                 CodecStats *stats = nullptr);

/// max_i |decode(e)_i - ref_i|. Throws on size mismatch.
double max_abs_error(const EncodedState &encoded, const StateVector &ref);

QubitExpectation expectation_all_axes(const EncodedState &state, Qubit q, int threads = 1);
double expectation(const EncodedState &state, Axis axis, Qubit q, int threads = 1);
ExpectationReport measure_expectations(const EncodedState &state, int threads = 1);

/// Binary dump: little-endian header (u32 magic "QCSA", u32 version, u32 N,
/// u32 table length), the table as doubles, then the 2^(N+1)-byte code array.
void write_encoded_dump(std::ostream &out, const EncodedState &state);
EncodedState read_encoded_dump(std::istream &in);

}  // namespace qcsim
