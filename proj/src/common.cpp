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

#include "qcsim/common.hpp"

#include <algorithm>

namespace qcsim {

namespace {

std::string location_prefix(std::size_t line, std::size_t column) {
    if (line == 0) {
        return {};
    }
    std::string out = "line " + std::to_string(line);
    if (column != 0) {
        out += ", column " + std::to_string(column);
    }
    return out + ": ";
}

}  // namespace

ParseError::ParseError(const std::string &message, std::size_t line, std::size_t column)
    : std::invalid_argument(location_prefix(line, column) + message), line_(line), column_(column) {
}

MemoryBudgetError::MemoryBudgetError(std::uint64_t required_bytes, std::uint64_t budget_bytes)
    : std::runtime_error(
          "state needs " + std::to_string(required_bytes) + " bytes but the memory budget is " +
          std::to_string(budget_bytes) + " bytes"),
      required_(required_bytes),
      budget_(budget_bytes) {
}

Bitstring Bitstring::from_string(std::string_view text) {
    Bitstring out(text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
        char c = text[text.size() - 1 - k];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain '0' and '1': '" + std::string(text) + "'");
        }
        out.bits_[k] = c == '1' ? 1 : 0;
    }
    return out;
}

Bitstring Bitstring::from_index(std::uint64_t index, std::size_t width) {
    Bitstring out(width);
    for (std::size_t k = 0; k < width && k < 64; ++k) {
        out.bits_[k] = (index >> k) & 1;
    }
    return out;
}

Bitstring Bitstring::all_ones(std::size_t width) {
    Bitstring out(width);
    std::fill(out.bits_.begin(), out.bits_.end(), 1);
    return out;
}

std::uint64_t Bitstring::to_index() const {
    if (bits_.size() > 64) {
        throw std::out_of_range("bitstring wider than 64 qubits has no machine index");
    }
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        index |= static_cast<std::uint64_t>(bits_[k]) << k;
    }
    return index;
}

std::string Bitstring::to_string() const {
    std::string out(bits_.size(), '0');
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        out[bits_.size() - 1 - k] = bits_[k] ? '1' : '0';
    }
    return out;
}

std::string format_bits(std::uint64_t index, std::size_t width) {
    return Bitstring::from_index(index, width).to_string();
}

}  // namespace qcsim
