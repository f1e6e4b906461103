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
#include "qcsim/codec.hpp"

namespace qcsim {

namespace {
constexpr std::uint32_t kEncodedMagic = 0x41534351;  // "QCSA"
constexpr std::uint32_t kEncodedVersion = 1;
}  // namespace

void write_encoded_dump(std::ostream &out, const EncodedState &state) {
    const Codebook &book = state.codebook();
    detail::write_le<std::uint32_t>(out, kEncodedMagic);
    detail::write_le<std::uint32_t>(out, kEncodedVersion);
    detail::write_le<std::uint32_t>(out, static_cast<std::uint32_t>(state.num_qubits()));
    detail::write_le<std::uint32_t>(out, static_cast<std::uint32_t>(book.size()));
    for (double v : book.values()) {
        detail::write_le<double>(out, v);
    }
    for (const Cell &c : state.cells()) {
        detail::write_le<std::uint8_t>(out, c.re);
        detail::write_le<std::uint8_t>(out, c.im);
    }
    if (!out) {
        throw std::runtime_error("failed writing encoded dump");
    }
}

EncodedState read_encoded_dump(std::istream &in) {
    if (detail::read_le<std::uint32_t>(in) != kEncodedMagic) {
        throw std::runtime_error("not an encoded state dump (bad magic)");
    }
    if (auto version = detail::read_le<std::uint32_t>(in); version != kEncodedVersion) {
        throw std::runtime_error("unsupported encoded dump version " + std::to_string(version));
    }
    auto n = detail::read_le<std::uint32_t>(in);
    if (n < 1 || n > 40) {
        throw std::runtime_error("encoded dump claims " + std::to_string(n) + " qubits");
    }
    auto length = detail::read_le<std::uint32_t>(in);
    if (length > Codebook::kCapacity || length % 2 != 0) {
        throw CorruptCodeError("encoded dump has an invalid table length " + std::to_string(length));
    }
    std::vector<double> values(length);
    for (double &v : values) {
        v = detail::read_le<double>(in);
    }
    std::vector<double> magnitudes(values.begin() + length / 2, values.end());
    Codebook book;
    try {
        book = Codebook::from_magnitudes(magnitudes);
    } catch (const std::invalid_argument &e) {
        throw CorruptCodeError(std::string("encoded dump table: ") + e.what());
    }
    if (!std::equal(values.begin(), values.end(), book.values().begin())) {
        throw CorruptCodeError("encoded dump table is not sign-symmetric");
    }
    EncodedState state(n);
    state.set_codebook(std::move(book));
    for (Cell &c : state.cells()) {
        c.re = detail::read_le<std::uint8_t>(in);
        c.im = detail::read_le<std::uint8_t>(in);
    }
    return state;
}

}  // namespace qcsim
