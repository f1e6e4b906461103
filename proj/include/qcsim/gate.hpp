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
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qcsim/common.hpp"

namespace qcsim {

enum class GateKind : std::uint8_t {
    I,
    X,
    Y,
    Z,
    H,
    S,
    SDG,
    T,
    TDG,
    V,   // X^(1/2)
    VY,  // Y^(1/2)
    RX,
    RY,
    RZ,
    U3,
    CNOT,
    CZ,
    SWAP,
    DIAG1,  // diag(d0, d1), not necessarily unitary
};

/// Row-major 2x2 matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

struct GateInfo {
    GateKind kind;
    std::string_view mnemonic;
    unsigned arity;
    unsigned num_params;
};

const GateInfo &gate_info(GateKind kind);
std::optional<GateKind> gate_kind_from_mnemonic(std::string_view mnemonic);

/// One primitive operation on one or two qubits.
///
/// For two-qubit kinds the first qubit is the control (CNOT) or simply the
/// first operand (CZ, SWAP are symmetric). Angles are radians. DIAG1 stores
/// its two complex entries as (re0, im0, re1, im1).
class Gate {
   public:
    static Gate single(GateKind kind, Qubit q);
    static Gate rotation(GateKind kind, Qubit q, double angle);
    static Gate u3(Qubit q, double theta, double phi, double lambda);
    static Gate two(GateKind kind, Qubit a, Qubit b);
    static Gate diag1(Qubit q, Complex d0, Complex d1);
    /// Generic constructor used by the parsers; validates arity and params.
    static Gate make(GateKind kind, std::span<const Qubit> qubits, std::span<const double> params);

    static Gate h(Qubit q) {
        return single(GateKind::H, q);
    }
    static Gate x(Qubit q) {
        return single(GateKind::X, q);
    }
    static Gate cnot(Qubit control, Qubit target) {
        return two(GateKind::CNOT, control, target);
    }
    static Gate cz(Qubit a, Qubit b) {
        return two(GateKind::CZ, a, b);
    }

    GateKind kind() const noexcept {
        return kind_;
    }
    unsigned arity() const noexcept {
        return arity_;
    }
    std::span<const Qubit> qubits() const noexcept {
        return {qubits_.data(), arity_};
    }
    Qubit qubit(std::size_t k) const {
        return qubits_.at(k);
    }
    std::span<const double> params() const noexcept {
        return {params_.data(), num_params_};
    }
    bool is_two_qubit() const noexcept {
        return arity_ == 2;
    }
    /// True for gates that are diagonal in the computational basis.
    bool is_diagonal() const noexcept;
    /// Matrix of a single-qubit gate. Throws for two-qubit kinds.
    Matrix2 matrix() const;
    /// Diagonal entries of a diagonal single-qubit gate.
    std::array<Complex, 2> diagonal() const;
    std::string_view mnemonic() const {
        return gate_info(kind_).mnemonic;
    }

    /// Copy of this gate acting on remapped qubit indices.
    Gate with_qubits(std::span<const Qubit> qubits) const;

    bool operator==(const Gate &other) const;

   private:
    Gate() = default;

    GateKind kind_ = GateKind::I;
    std::uint8_t arity_ = 1;
    std::uint8_t num_params_ = 0;
    std::array<Qubit, 2> qubits_{};
    std::array<double, 4> params_{};
};

std::string to_string(const Gate &gate);

}  // namespace qcsim
