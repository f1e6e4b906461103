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

#include <filesystem>
#include <string>
#include <string_view>

#include "qcsim/circuit.hpp"

namespace qcsim {

/// Parses the native instruction format:
///
///     qubits 3          # header, must come first
///     H 0
///     CNOT 0 1
///     RZ 2 1.5707963267948966E+00
///
/// One statement per line, `#` starts a comment, mnemonics are
/// case-insensitive, angles are decimal literals in radians. DIAG1 lines
/// (`DIAG1 q re0 im0 re1 im1`) are accepted so that path-sum subcircuits can
/// be written out and read back. Errors throw ParseError with the line number.
Circuit parse_circuit(std::string_view text);

/// Canonical native text. Angles use 17 significant digits, so
/// parse_circuit(emit_circuit(c)) == c bit for bit. No trailing newline.
std::string emit_circuit(const Circuit &circuit);

/// OpenQASM 2.0 subset: a single qreg and the gates
/// h x y z s sdg t tdg rx ry rz u3 cx cz swap (plus `id` and `barrier`,
/// which are accepted as no-ops). Parameters may be arithmetic expressions
/// over numbers and `pi`. Anything else (creg, measure, if, gate
/// definitions, ...) is rejected with a ParseError naming the construct.
Circuit parse_openqasm(std::string_view text);

/// True when the text starts (after comments/whitespace) with `OPENQASM`.
bool looks_like_openqasm(std::string_view text);

/// Reads a file and dispatches on its content to one of the two parsers.
Circuit load_circuit_file(const std::filesystem::path &path);

}  // namespace qcsim
