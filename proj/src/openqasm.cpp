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

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <unordered_map>

#include "qcsim/parser.hpp"

namespace qcsim {

namespace {

enum class TokenType { Identifier, Number, String, Symbol, End };

struct Token {
    TokenType type;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> tokens;
    std::size_t line = 1, column = 1, k = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t j = 0; j < count; ++j) {
            if (src[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++k;
        }
    };
    while (k < src.size()) {
        char c = src[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (src.substr(k, 2) == "//") {
            while (k < src.size() && src[k] != '\n') {
                advance(1);
            }
            continue;
        }
        std::size_t tok_line = line, tok_col = column, start = k;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = k;
            while (end < src.size() && (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_')) {
                ++end;
            }
            advance(end - k);
            tokens.push_back({TokenType::Identifier, std::string(src.substr(start, end - start)), tok_line, tok_col});
        } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && k + 1 < src.size() &&
                                                                    std::isdigit(static_cast<unsigned char>(src[k + 1])))) {
            std::size_t end = k;
            while (end < src.size() && (std::isdigit(static_cast<unsigned char>(src[end])) || src[end] == '.')) {
                ++end;
            }
            if (end < src.size() && (src[end] == 'e' || src[end] == 'E')) {
                std::size_t exp = end + 1;
                if (exp < src.size() && (src[exp] == '+' || src[exp] == '-')) {
                    ++exp;
                }
                if (exp < src.size() && std::isdigit(static_cast<unsigned char>(src[exp]))) {
                    end = exp;
                    while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) {
                        ++end;
                    }
                }
            }
            advance(end - k);
            tokens.push_back({TokenType::Number, std::string(src.substr(start, end - start)), tok_line, tok_col});
        } else if (c == '"') {
            std::size_t end = src.find('"', k + 1);
            if (end == std::string_view::npos) {
                throw ParseError("unterminated string", tok_line, tok_col);
            }
            advance(end + 1 - k);
            tokens.push_back({TokenType::String, std::string(src.substr(start + 1, end - start - 1)), tok_line, tok_col});
        } else if (src.substr(k, 2) == "->" || src.substr(k, 2) == "==") {
            advance(2);
            tokens.push_back({TokenType::Symbol, std::string(src.substr(start, 2)), tok_line, tok_col});
        } else if (std::string_view(";,()[]{}+-*/^").find(c) != std::string_view::npos) {
            advance(1);
            tokens.push_back({TokenType::Symbol, std::string(1, c), tok_line, tok_col});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", tok_line, tok_col);
        }
    }
    tokens.push_back({TokenType::End, "", line, column});
    return tokens;
}

struct QasmGate {
    GateKind kind;
    unsigned num_params;
};

const std::unordered_map<std::string, QasmGate> &qasm_gates() {
    static const std::unordered_map<std::string, QasmGate> table{
        {"id", {GateKind::I, 0}},    {"h", {GateKind::H, 0}},     {"x", {GateKind::X, 0}},
        {"y", {GateKind::Y, 0}},     {"z", {GateKind::Z, 0}},     {"s", {GateKind::S, 0}},
        {"sdg", {GateKind::SDG, 0}}, {"t", {GateKind::T, 0}},     {"tdg", {GateKind::TDG, 0}},
        {"rx", {GateKind::RX, 1}},   {"ry", {GateKind::RY, 1}},   {"rz", {GateKind::RZ, 1}},
        {"u3", {GateKind::U3, 3}},   {"U", {GateKind::U3, 3}},    {"cx", {GateKind::CNOT, 0}},
        {"CX", {GateKind::CNOT, 0}}, {"cz", {GateKind::CZ, 0}},   {"swap", {GateKind::SWAP, 0}},
    };
    return table;
}

class QasmParser {
   public:
    explicit QasmParser(std::string_view text) : tokens_(tokenize(text)) {
    }

    Circuit parse() {
        const Token &head = peek();
        if (head.type != TokenType::Identifier || head.text != "OPENQASM") {
            throw ParseError("OpenQASM version header missing", head.line, head.column);
        }
        next();
        const Token &version = next();
        if (version.type != TokenType::Number || version.text != "2.0") {
            throw ParseError("unsupported OpenQASM version '" + version.text + "'", version.line, version.column);
        }
        expect(";");

        while (peek().type != TokenType::End) {
            statement();
        }
        if (!circuit_) {
            throw ParseError("program declares no qreg", peek().line, peek().column);
        }
        return std::move(*circuit_);
    }

   private:
    const Token &peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token &next() {
        const Token &t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) {
            ++pos_;
        }
        return t;
    }
    bool accept(std::string_view symbol) {
        if (peek().type == TokenType::Symbol && peek().text == symbol) {
            next();
            return true;
        }
        return false;
    }
    void expect(std::string_view symbol) {
        const Token &t = peek();
        if (!accept(symbol)) {
            throw ParseError(
                "expected '" + std::string(symbol) + "', got '" + (t.type == TokenType::End ? "end of input" : t.text) +
                    "'",
                t.line, t.column);
        }
    }
    [[noreturn]] void unsupported(const Token &t, const std::string &what) {
        throw ParseError("unsupported construct: " + what, t.line, t.column);
    }

    void statement() {
        const Token &t = peek();
        if (t.type != TokenType::Identifier) {
            throw ParseError("expected a statement, got '" + t.text + "'", t.line, t.column);
        }
        if (t.text == "include") {
            next();
            const Token &file = next();
            if (file.type != TokenType::String) {
                throw ParseError("include expects a file name string", file.line, file.column);
            }
            if (file.text != "qelib1.inc") {
                unsupported(file, "include of '" + file.text + "'");
            }
            expect(";");
        } else if (t.text == "qreg") {
            next();
            declare_qreg(t);
        } else if (t.text == "barrier") {
            next();
            arguments();
            expect(";");
        } else if (t.text == "creg" || t.text == "measure" || t.text == "reset" || t.text == "if" ||
                   t.text == "gate" || t.text == "opaque") {
            unsupported(t, "'" + t.text + "'");
        } else {
            gate_statement();
        }
    }

    void declare_qreg(const Token &keyword) {
        if (circuit_) {
            unsupported(keyword, "second qreg");
        }
        const Token &name = next();
        if (name.type != TokenType::Identifier) {
            throw ParseError("expected register name", name.line, name.column);
        }
        expect("[");
        std::size_t size = integer();
        expect("]");
        expect(";");
        if (size == 0) {
            throw ParseError("qreg must have at least one qubit", name.line, name.column);
        }
        register_name_ = name.text;
        circuit_.emplace(size);
    }

    std::size_t integer() {
        const Token &t = next();
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (t.type != TokenType::Number || ec != std::errc{} || end != t.text.data() + t.text.size()) {
            throw ParseError("expected an integer, got '" + t.text + "'", t.line, t.column);
        }
        return value;
    }

    // A register reference: either q[k] or the whole register q (nullopt).
    std::vector<std::optional<Qubit>> arguments() {
        std::vector<std::optional<Qubit>> args;
        do {
            const Token &name = next();
            if (name.type != TokenType::Identifier) {
                throw ParseError("expected a qubit argument", name.line, name.column);
            }
            if (!circuit_) {
                throw ParseError("qubit used before qreg declaration", name.line, name.column);
            }
            if (name.text != register_name_) {
                throw ParseError("unknown register '" + name.text + "'", name.line, name.column);
            }
            if (accept("[")) {
                const Token &index_tok = peek();
                std::size_t index = integer();
                expect("]");
                if (index >= circuit_->num_qubits()) {
                    throw ParseError(
                        "qubit index " + std::to_string(index) + " out of range for qreg " + register_name_ + "[" +
                            std::to_string(circuit_->num_qubits()) + "]",
                        index_tok.line, index_tok.column);
                }
                args.emplace_back(static_cast<Qubit>(index));
            } else {
                args.emplace_back(std::nullopt);
            }
        } while (accept(","));
        return args;
    }

    void gate_statement() {
        const Token &name = next();
        auto it = qasm_gates().find(name.text);
        if (it == qasm_gates().end()) {
            unsupported(name, "gate '" + name.text + "'");
        }
        const QasmGate &spec = it->second;
        std::vector<double> params;
        if (accept("(")) {
            if (!accept(")")) {
                do {
                    params.push_back(expression());
                } while (accept(","));
                expect(")");
            }
        }
        if (params.size() != spec.num_params) {
            throw ParseError(
                "gate '" + name.text + "' takes " + std::to_string(spec.num_params) + " parameter(s)", name.line,
                name.column);
        }
        auto args = arguments();
        expect(";");
        unsigned arity = gate_info(spec.kind).arity;
        if (args.size() != arity) {
            throw ParseError(
                "gate '" + name.text + "' takes " + std::to_string(arity) + " qubit argument(s)", name.line,
                name.column);
        }
        if (arity == 1 && !args[0]) {
            for (Qubit q = 0; q < circuit_->num_qubits(); ++q) {
                circuit_->append(Gate::make(spec.kind, std::array{q}, params));
            }
            return;
        }
        std::vector<Qubit> qubits;
        for (const auto &a : args) {
            if (!a) {
                unsupported(name, "register broadcast on two-qubit gate '" + name.text + "'");
            }
            qubits.push_back(*a);
        }
        try {
            circuit_->append(Gate::make(spec.kind, qubits, params));
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what(), name.line, name.column);
        }
    }

    // expression := term (('+'|'-') term)*
    double expression() {
        double value = term();
        while (true) {
            if (accept("+")) {
                value += term();
            } else if (accept("-")) {
                value -= term();
            } else {
                return value;
            }
        }
    }
    double term() {
        double value = unary();
        while (true) {
            if (accept("*")) {
                value *= unary();
            } else if (accept("/")) {
                value /= unary();
            } else {
                return value;
            }
        }
    }
    double unary() {
        if (accept("-")) {
            return -unary();
        }
        if (accept("+")) {
            return unary();
        }
        double base = primary();
        if (accept("^")) {
            return std::pow(base, unary());
        }
        return base;
    }
    double primary() {
        const Token &t = next();
        if (t.type == TokenType::Number) {
            double value = 0;
            auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
            if (ec != std::errc{} || end != t.text.data() + t.text.size()) {
                throw ParseError("bad number '" + t.text + "'", t.line, t.column);
            }
            return value;
        }
        if (t.type == TokenType::Identifier) {
            if (t.text == "pi") {
                return std::numbers::pi;
            }
            static const std::unordered_map<std::string, double (*)(double)> functions{
                {"sin", [](double v) { return std::sin(v); }},   {"cos", [](double v) { return std::cos(v); }},
                {"tan", [](double v) { return std::tan(v); }},   {"exp", [](double v) { return std::exp(v); }},
                {"ln", [](double v) { return std::log(v); }},    {"sqrt", [](double v) { return std::sqrt(v); }},
            };
            auto f = functions.find(t.text);
            if (f == functions.end()) {
                throw ParseError("unknown identifier '" + t.text + "' in expression", t.line, t.column);
            }
            expect("(");
            double arg = expression();
            expect(")");
            return f->second(arg);
        }
        if (t.type == TokenType::Symbol && t.text == "(") {
            double value = expression();
            expect(")");
            return value;
        }
        throw ParseError("unexpected '" + t.text + "' in expression", t.line, t.column);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::optional<Circuit> circuit_;
    std::string register_name_;
};

}  // namespace

Circuit parse_openqasm(std::string_view text) {
    return QasmParser(text).parse();
}

}  // namespace qcsim
