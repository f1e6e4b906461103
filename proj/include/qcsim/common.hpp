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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcsim {

using Complex = std::complex<double>;
using Qubit = std::uint32_t;

/// Raised by the text front ends. `line()` is 1-based; 0 when unknown.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, std::size_t line, std::size_t column = 0);
    std::size_t line() const noexcept {
        return line_;
    }
    std::size_t column() const noexcept {
        return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
};

/// A state would not fit in the configured memory budget.
class MemoryBudgetError : public std::runtime_error {
   public:
    MemoryBudgetError(std::uint64_t required_bytes, std::uint64_t budget_bytes);
    std::uint64_t required_bytes() const noexcept {
        return required_;
    }
    std::uint64_t budget_bytes() const noexcept {
        return budget_;
    }

   private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// A width-N computational basis label. Bit k is the value of qubit k.
///
/// The text form prints qubit N-1 first and qubit 0 last, so "10" on two
/// qubits is index 2 (qubit 1 set), matching the usual binary reading.
class Bitstring {
   public:
    Bitstring() = default;
    explicit Bitstring(std::size_t width) : bits_(width, 0) {
    }

    static Bitstring from_string(std::string_view text);
    static Bitstring from_index(std::uint64_t index, std::size_t width);
    static Bitstring all_ones(std::size_t width);

    std::size_t width() const noexcept {
        return bits_.size();
    }
    bool get(std::size_t qubit) const {
        return bits_.at(qubit) != 0;
    }
    void set(std::size_t qubit, bool value) {
        bits_.at(qubit) = value ? 1 : 0;
    }
    /// Requires width() <= 64.
    std::uint64_t to_index() const;
    std::string to_string() const;

    bool operator==(const Bitstring &) const = default;

   private:
    std::vector<std::uint8_t> bits_;
};

std::string format_bits(std::uint64_t index, std::size_t width);

}  // namespace qcsim
