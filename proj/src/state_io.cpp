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

#include <istream>
#include <ostream>

#include "binary_io.hpp"
#include "qcsim/statevector.hpp"

namespace qcsim {

namespace {
constexpr std::uint32_t kStateMagic = 0x56534351;  // "QCSV"
constexpr std::uint32_t kStateVersion = 1;
}  // namespace

void write_state_dump(std::ostream &out, const StateVector &state) {
    detail::write_le<std::uint32_t>(out, kStateMagic);
    detail::write_le<std::uint32_t>(out, kStateVersion);
    detail::write_le<std::uint64_t>(out, state.num_qubits());
    for (const Complex &a : state.amplitudes()) {
        detail::write_le<double>(out, a.real());
        detail::write_le<double>(out, a.imag());
    }
    if (!out) {
        throw std::runtime_error("failed writing state dump");
    }
}

StateVector read_state_dump(std::istream &in) {
    if (detail::read_le<std::uint32_t>(in) != kStateMagic) {
        throw std::runtime_error("not a state dump (bad magic)");
    }
    if (auto version = detail::read_le<std::uint32_t>(in); version != kStateVersion) {
        throw std::runtime_error("unsupported state dump version " + std::to_string(version));
    }
    auto n = detail::read_le<std::uint64_t>(in);
    if (n > 40) {
        throw std::runtime_error("state dump claims " + std::to_string(n) + " qubits");
    }
    StateVector state(static_cast<std::size_t>(n));
    for (Complex &a : state.amplitudes()) {
        double re = detail::read_le<double>(in);
        double im = detail::read_le<double>(in);
        a = {re, im};
    }
    return state;
}

}  // namespace qcsim
