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

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace qcsim::detail {

template <class T>
T to_little_endian(T value) {
    if constexpr (std::endian::native == std::endian::big) {
        unsigned char bytes[sizeof(T)];
        std::memcpy(bytes, &value, sizeof(T));
        for (std::size_t k = 0; k < sizeof(T) / 2; ++k) {
            std::swap(bytes[k], bytes[sizeof(T) - 1 - k]);
        }
        std::memcpy(&value, bytes, sizeof(T));
    }
    return value;
}

template <class T>
void write_le(std::ostream &out, T value) {
    value = to_little_endian(value);
    out.write(reinterpret_cast<const char *>(&value), sizeof(T));
}

template <class T>
T read_le(std::istream &in) {
    T value{};
    if (!in.read(reinterpret_cast<char *>(&value), sizeof(T))) {
        throw std::runtime_error("truncated dump");
    }
    return to_little_endian(value);
}

}  // namespace qcsim::detail
