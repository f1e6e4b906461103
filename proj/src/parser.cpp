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

#include "qcsim/parser.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace qcsim {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) {
            ++k;
        }
        std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            ++k;
        }
        if (k > start) {
            tokens.push_back(line.substr(start, k - start));
        }
    }
    return tokens;
}

std::uint64_t parse_unsigned(std::string_view token, std::size_t line, const char *what) {
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
        throw ParseError(std::string("expected ") + what + ", got '" + std::string(token) + "'", line);
    }
    return value;
}

double parse_angle(std::string_view token, std::size_t line) {
    double value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
        throw ParseError("expected a decimal angle, got '" + std::string(token) + "'", line);
    }
    return value;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_number;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            continue;
        }

        if (tokens[0] == "qubits") {
            if (circuit) {
                throw ParseError("duplicate `qubits` header", line_number);
            }
            if (tokens.size() != 2) {
                throw ParseError("header must read `qubits N`", line_number);
            }
            std::uint64_t n = parse_unsigned(tokens[1], line_number, "a qubit count");
            if (n == 0) {
                throw ParseError("qubit count must be at least 1", line_number);
            }
            circuit.emplace(n);
            continue;
        }
        if (!circuit) {
            throw ParseError("missing `qubits N` header before first gate", line_number);
        }

        auto kind = gate_kind_from_mnemonic(tokens[0]);
        if (!kind) {
            throw ParseError("unknown mnemonic '" + std::string(tokens[0]) + "'", line_number);
        }
        const GateInfo &info = gate_info(*kind);
        if (tokens.size() != 1 + info.arity + info.num_params) {
            throw ParseError(
                std::string(info.mnemonic) + " expects " + std::to_string(info.arity) + " qubit(s) and " +
                    std::to_string(info.num_params) + " angle(s)",
                line_number);
        }
        std::vector<Qubit> qubits;
        for (unsigned k = 0; k < info.arity; ++k) {
            std::uint64_t q = parse_unsigned(tokens[1 + k], line_number, "a qubit index");
            if (q >= circuit->num_qubits()) {
                throw ParseError(
                    "qubit index " + std::to_string(q) + " out of range for " +
                        std::to_string(circuit->num_qubits()) + " qubits",
                    line_number);
            }
            qubits.push_back(static_cast<Qubit>(q));
        }
        std::vector<double> params;
        for (unsigned k = 0; k < info.num_params; ++k) {
            params.push_back(parse_angle(tokens[1 + info.arity + k], line_number));
        }
        try {
            circuit->append(Gate::make(*kind, qubits, params));
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what(), line_number);
        }
    }
    if (!circuit) {
        throw ParseError("missing `qubits N` header", 0);
    }
    return std::move(*circuit);
}

std::string emit_circuit(const Circuit &circuit) {
    std::string out = "qubits " + std::to_string(circuit.num_qubits());
    char buffer[40];
    for (const Gate &g : circuit) {
        out += '\n';
        out += g.mnemonic();
        for (Qubit q : g.qubits()) {
            out += ' ';
            out += std::to_string(q);
        }
        for (double p : g.params()) {
            std::snprintf(buffer, sizeof(buffer), " %.16E", p);
            out += buffer;
        }
    }
    return out;
}

bool looks_like_openqasm(std::string_view text) {
    std::size_t k = 0;
    while (k < text.size()) {
        char c = text[k];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++k;
        } else if (text.substr(k, 2) == "//") {
            k = text.find('\n', k);
            if (k == std::string_view::npos) {
                return false;
            }
        } else {
            return text.substr(k, 8) == "OPENQASM";
        }
    }
    return false;
}

Circuit load_circuit_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open circuit file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    Circuit c = looks_like_openqasm(text) ? parse_openqasm(text) : parse_circuit(text);
    if (c.name().empty()) {
        c.set_name(path.stem().string());
    }
    return c;
}

}  // namespace qcsim
