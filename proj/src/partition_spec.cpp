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

#include <charconv>
#include <fstream>

#include "qcsim/pathsum.hpp"

namespace qcsim {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

Qubit parse_qubit(std::string_view text, std::size_t num_qubits) {
    text = trim(text);
    Qubit q = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), q);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
        throw std::invalid_argument("partition spec: '" + std::string(text) + "' is not a qubit index");
    }
    if (q >= num_qubits) {
        throw std::invalid_argument(
            "partition spec: qubit " + std::to_string(q) + " outside a " + std::to_string(num_qubits) + "-qubit circuit");
    }
    return q;
}

}  // namespace

std::vector<std::vector<Qubit>> parse_partition_spec(std::string_view spec, std::size_t num_qubits) {
    std::vector<std::vector<Qubit>> blocks;
    for (std::string_view block_text : split(spec, ';')) {
        std::vector<Qubit> block;
        if (trim(block_text).empty()) {
            throw std::invalid_argument("partition spec: empty block in '" + std::string(spec) + "'");
        }
        for (std::string_view item : split(block_text, ',')) {
            const auto dash = item.find('-');
            if (dash == std::string_view::npos) {
                block.push_back(parse_qubit(item, num_qubits));
                continue;
            }
            Qubit lo = parse_qubit(item.substr(0, dash), num_qubits);
            Qubit hi = parse_qubit(item.substr(dash + 1), num_qubits);
            if (hi < lo) {
                throw std::invalid_argument("partition spec: descending range '" + std::string(trim(item)) + "'");
            }
            for (Qubit q = lo; q <= hi; ++q) {
                block.push_back(q);
            }
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::vector<std::vector<Qubit>> default_bisection(std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("cannot partition an empty register");
    }
    const std::size_t first = num_qubits / 2;
    std::vector<std::vector<Qubit>> blocks;
    if (first > 0) {
        blocks.emplace_back();
        for (Qubit q = 0; q < first; ++q) {
            blocks.back().push_back(q);
        }
    }
    blocks.emplace_back();
    for (auto q = static_cast<Qubit>(first); q < num_qubits; ++q) {
        blocks.back().push_back(q);
    }
    return blocks;
}

CoefficientRequest CoefficientRequest::first(std::size_t m, std::size_t num_qubits) {
    if (m == 0) {
        throw std::invalid_argument("at least one coefficient must be requested");
    }
    if (num_qubits < 64 && m > (std::uint64_t{1} << num_qubits)) {
        throw std::invalid_argument(
            std::to_string(m) + " coefficients requested from a " + std::to_string(num_qubits) + "-qubit state");
    }
    CoefficientRequest request;
    request.targets.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        request.targets.push_back(Bitstring::from_index(i, num_qubits));
    }
    return request;
}

namespace {

Bitstring parse_target(std::string_view text, std::size_t num_qubits) {
    text = trim(text);
    if (text == "all0") {
        return Bitstring(num_qubits);
    }
    if (text == "all1") {
        return Bitstring::all_ones(num_qubits);
    }
    Bitstring bits = Bitstring::from_string(text);
    if (bits.width() != num_qubits) {
        throw std::invalid_argument("target '" + std::string(text) + "' has width " + std::to_string(bits.width()) +
                                    ", circuit has " + std::to_string(num_qubits) + " qubits");
    }
    return bits;
}

}  // namespace

CoefficientRequest CoefficientRequest::parse(std::string_view spec, std::size_t num_qubits) {
    CoefficientRequest request;
    for (std::string_view item : split(spec, ',')) {
        request.targets.push_back(parse_target(item, num_qubits));
    }
    return request;
}

CoefficientRequest CoefficientRequest::from_file(const std::string &path, std::size_t num_qubits) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open target file " + path);
    }
    CoefficientRequest request;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view text = line;
        text = trim(text.substr(0, text.find('#')));
        if (!text.empty()) {
            request.targets.push_back(parse_target(text, num_qubits));
        }
    }
    if (request.targets.empty()) {
        throw std::invalid_argument("target file " + path + " lists no bitstrings");
    }
    return request;
}

}  // namespace qcsim
