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

#include "qcsim/gate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qcsim {

namespace {

constexpr std::array<GateInfo, 19> kGateTable{{
    {GateKind::I, "I", 1, 0},
    {GateKind::X, "X", 1, 0},
    {GateKind::Y, "Y", 1, 0},
    {GateKind::Z, "Z", 1, 0},
    {GateKind::H, "H", 1, 0},
    {GateKind::S, "S", 1, 0},
    {GateKind::SDG, "SDG", 1, 0},
    {GateKind::T, "T", 1, 0},
    {GateKind::TDG, "TDG", 1, 0},
    {GateKind::V, "V", 1, 0},
    {GateKind::VY, "VY", 1, 0},
    {GateKind::RX, "RX", 1, 1},
    {GateKind::RY, "RY", 1, 1},
    {GateKind::RZ, "RZ", 1, 1},
    {GateKind::U3, "U3", 1, 3},
    {GateKind::CNOT, "CNOT", 2, 0},
    {GateKind::CZ, "CZ", 2, 0},
    {GateKind::SWAP, "SWAP", 2, 0},
    {GateKind::DIAG1, "DIAG1", 1, 4},
}};

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2;

}  // namespace

const GateInfo &gate_info(GateKind kind) {
    return kGateTable[static_cast<std::size_t>(kind)];
}

std::optional<GateKind> gate_kind_from_mnemonic(std::string_view mnemonic) {
    std::string upper(mnemonic);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (const auto &info : kGateTable) {
        if (info.mnemonic == upper) {
            return info.kind;
        }
    }
    return std::nullopt;
}

Gate Gate::make(GateKind kind, std::span<const Qubit> qubits, std::span<const double> params) {
    const GateInfo &info = gate_info(kind);
    if (qubits.size() != info.arity) {
        throw std::invalid_argument(
            std::string(info.mnemonic) + " takes " + std::to_string(info.arity) + " qubit(s), got " +
            std::to_string(qubits.size()));
    }
    if (params.size() != info.num_params) {
        throw std::invalid_argument(
            std::string(info.mnemonic) + " takes " + std::to_string(info.num_params) + " parameter(s), got " +
            std::to_string(params.size()));
    }
    if (info.arity == 2 && qubits[0] == qubits[1]) {
        throw std::invalid_argument(std::string(info.mnemonic) + " needs two distinct qubits");
    }
    for (double p : params) {
        if (!std::isfinite(p)) {
            throw std::invalid_argument(std::string(info.mnemonic) + " parameter is not finite");
        }
    }
    Gate g;
    g.kind_ = kind;
    g.arity_ = static_cast<std::uint8_t>(info.arity);
    g.num_params_ = static_cast<std::uint8_t>(info.num_params);
    std::copy(qubits.begin(), qubits.end(), g.qubits_.begin());
    std::copy(params.begin(), params.end(), g.params_.begin());
    return g;
}

Gate Gate::single(GateKind kind, Qubit q) {
    return make(kind, std::array{q}, {});
}

Gate Gate::rotation(GateKind kind, Qubit q, double angle) {
    return make(kind, std::array{q}, std::array{angle});
}

Gate Gate::u3(Qubit q, double theta, double phi, double lambda) {
    return make(GateKind::U3, std::array{q}, std::array{theta, phi, lambda});
}

Gate Gate::two(GateKind kind, Qubit a, Qubit b) {
    return make(kind, std::array{a, b}, {});
}

Gate Gate::diag1(Qubit q, Complex d0, Complex d1) {
    return make(GateKind::DIAG1, std::array{q}, std::array{d0.real(), d0.imag(), d1.real(), d1.imag()});
}

bool Gate::is_diagonal() const noexcept {
    switch (kind_) {
        case GateKind::I:
        case GateKind::Z:
        case GateKind::S:
        case GateKind::SDG:
        case GateKind::T:
        case GateKind::TDG:
        case GateKind::RZ:
        case GateKind::CZ:
        case GateKind::DIAG1:
            return true;
        default:
            return false;
    }
}

Matrix2 Gate::matrix() const {
    const Complex i{0, 1};
    const double r = kInvSqrt2;
    switch (kind_) {
        case GateKind::I:
            return {1, 0, 0, 1};
        case GateKind::X:
            return {0, 1, 1, 0};
        case GateKind::Y:
            return {0, -i, i, 0};
        case GateKind::Z:
            return {1, 0, 0, -1};
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::S:
            return {1, 0, 0, i};
        case GateKind::SDG:
            return {1, 0, 0, -i};
        case GateKind::T:
            return {1, 0, 0, Complex{r, r}};
        case GateKind::TDG:
            return {1, 0, 0, Complex{r, -r}};
        case GateKind::V:
            return {Complex{0.5, 0.5}, Complex{0.5, -0.5}, Complex{0.5, -0.5}, Complex{0.5, 0.5}};
        case GateKind::VY:
            return {Complex{0.5, 0.5}, Complex{-0.5, -0.5}, Complex{0.5, 0.5}, Complex{0.5, 0.5}};
        case GateKind::RX: {
            double c = std::cos(params_[0] / 2), s = std::sin(params_[0] / 2);
            return {c, Complex{0, -s}, Complex{0, -s}, c};
        }
        case GateKind::RY: {
            double c = std::cos(params_[0] / 2), s = std::sin(params_[0] / 2);
            return {c, -s, s, c};
        }
        case GateKind::RZ:
            return {std::polar(1.0, -params_[0] / 2), 0, 0, std::polar(1.0, params_[0] / 2)};
        case GateKind::U3: {
            double c = std::cos(params_[0] / 2), s = std::sin(params_[0] / 2);
            double phi = params_[1], lambda = params_[2];
            return {c, -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda)};
        }
        case GateKind::DIAG1:
            return {Complex{params_[0], params_[1]}, 0, 0, Complex{params_[2], params_[3]}};
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
            break;
    }
    throw std::logic_error("matrix() called on two-qubit gate " + std::string(mnemonic()));
}

std::array<Complex, 2> Gate::diagonal() const {
    if (!is_diagonal() || is_two_qubit()) {
        throw std::logic_error(std::string(mnemonic()) + " is not a diagonal single-qubit gate");
    }
    Matrix2 m = matrix();
    return {m[0], m[3]};
}

Gate Gate::with_qubits(std::span<const Qubit> qubits) const {
    return make(kind_, qubits, params());
}

bool Gate::operator==(const Gate &other) const {
    return kind_ == other.kind_ && arity_ == other.arity_ && num_params_ == other.num_params_ &&
           std::equal(qubits().begin(), qubits().end(), other.qubits().begin()) &&
           std::equal(params().begin(), params().end(), other.params().begin());
}

std::string to_string(const Gate &gate) {
    std::ostringstream out;
    out << gate.mnemonic();
    for (Qubit q : gate.qubits()) {
        out << ' ' << q;
    }
    for (double p : gate.params()) {
        out << ' ' << p;
    }
    return out.str();
}

}  // namespace qcsim
