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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "qcsim/parser.hpp"
#include "qcsim/statevector.hpp"

namespace qcsim {
namespace {

namespace fs = std::filesystem;

std::size_t error_line(std::string_view text) {
    try {
        parse_circuit(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    return 0;
}

TEST(NativeParser, ReadsEveryStatementForm) {
    Circuit c = parse_circuit(
        "# leading comment\n"
        "qubits 3\n"
        "h 0\n"
        "CNOT 0 1   # trailing comment\n"
        "\n"
        "rz 2 1.5\n"
        "U3 1 0.1 -0.2 3e-1\n"
        "DIAG1 2 1 0 0 -1\n"
        "swap 0 2\n");
    ASSERT_EQ(c.num_qubits(), 3u);
    ASSERT_EQ(c.size(), 6u);
    EXPECT_EQ(c[0], Gate::h(0));
    EXPECT_EQ(c[1], Gate::cnot(0, 1));
    EXPECT_EQ(c[2], Gate::rotation(GateKind::RZ, 2, 1.5));
    EXPECT_EQ(c[3], Gate::u3(1, 0.1, -0.2, 0.3));
    EXPECT_EQ(c[4], Gate::diag1(2, 1.0, Complex(0, -1)));
    EXPECT_EQ(c[5], Gate::two(GateKind::SWAP, 0, 2));
}

TEST(NativeParser, ReportsLineNumbers) {
    EXPECT_EQ(error_line("H 0\n"), 1u);                           // header missing
    EXPECT_EQ(error_line("qubits 2\nH 0\nFOO 1\n"), 3u);          // unknown mnemonic
    EXPECT_EQ(error_line("qubits 2\nH 0\nCNOT 0 2\n"), 3u);       // qubit out of range
    EXPECT_EQ(error_line("qubits 2\n\nRZ 0\n"), 3u);              // missing angle
    EXPECT_EQ(error_line("qubits 2\nH 0 1\n"), 2u);               // extra operand
    EXPECT_EQ(error_line("qubits 2\nCZ 1 1\n"), 2u);              // repeated qubit
    EXPECT_EQ(error_line("qubits 2\nRX 0 abc\n"), 2u);            // bad number
    EXPECT_EQ(error_line("qubits 0\n"), 1u);                      // empty register
    EXPECT_EQ(error_line("qubits 2\nqubits 2\n"), 2u);            // second header
    EXPECT_THROW(parse_circuit("# only a comment\n"), ParseError);
}

TEST(NativeParser, EmitsCanonicalText) {
    Circuit c(2);
    c.append(Gate::h(0));
    c.append(Gate::cz(0, 1));
    c.append(Gate::rotation(GateKind::RX, 1, 0.5));
    EXPECT_EQ(emit_circuit(c), "qubits 2\nH 0\nCZ 0 1\nRX 1 5.0000000000000000E-01");
}

TEST(NativeParser, RoundTripsThousandRandomCircuits) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 1 + seed % 9;
        Circuit c = testing::random_circuit(n, 1 + seed % 40, seed, {.diag1 = true});
        Circuit back = parse_circuit(emit_circuit(c));
        ASSERT_EQ(back, c) << "seed " << seed;
        ASSERT_EQ(emit_circuit(back), emit_circuit(c));
    }
}

TEST(OpenQasm, Detection) {
    EXPECT_TRUE(looks_like_openqasm("// hi\n  OPENQASM 2.0;"));
    EXPECT_FALSE(looks_like_openqasm("qubits 2\nH 0"));
}

TEST(OpenQasm, CorpusMatchesNativeEquivalents) {
    const fs::path dir = fs::path(QCSIM_TEST_DATA) / "qasm";
    std::size_t checked = 0;
    for (const auto &entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".qasm") {
            continue;
        }
        fs::path native = entry.path();
        native.replace_extension(".txt");
        ASSERT_TRUE(fs::exists(native)) << native;
        Circuit q = load_circuit_file(entry.path());
        Circuit t = load_circuit_file(native);
        EXPECT_EQ(q.name(), entry.path().stem().string());
        ASSERT_EQ(q.num_qubits(), t.num_qubits()) << entry.path();
        StateVector a = run_circuit(q), b = run_circuit(t);
        EXPECT_LT(testing::max_abs_diff(a.amplitudes(), b.amplitudes()), 1e-12) << entry.path();
        ++checked;
    }
    EXPECT_GE(checked, 5u);
}

std::string qasm(const std::string &body) {
    return "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n" + body;
}

TEST(OpenQasm, RejectsUnsupportedConstructs) {
    for (const char *body : {"creg c[3];\n", "measure q[0] -> c[0];\n", "reset q[0];\n", "if(c==1) x q[0];\n",
                             "gate foo a { h a; }\n", "opaque bar a;\n"}) {
        try {
            parse_openqasm(qasm(body));
            FAIL() << "accepted " << body;
        } catch (const ParseError &e) {
            EXPECT_NE(std::string(e.what()).find("unsupported"), std::string::npos) << e.what();
            EXPECT_EQ(e.line(), 4u);
        }
    }
}

TEST(OpenQasm, RejectsMalformedPrograms) {
    EXPECT_THROW(parse_openqasm("qreg q[2];\nh q[0];\n"), ParseError);                     // no header
    EXPECT_THROW(parse_openqasm("OPENQASM 3.0;\nqreg q[2];\n"), ParseError);               // version
    EXPECT_THROW(parse_openqasm("OPENQASM 2.0;\ninclude \"other.inc\";\nqreg q[1];"), ParseError);
    EXPECT_THROW(parse_openqasm(qasm("h q[3];\n")), ParseError);                         // out of range
    EXPECT_THROW(parse_openqasm(qasm("h r[0];\n")), ParseError);                         // unknown register
    EXPECT_THROW(parse_openqasm(qasm("rx q[0];\n")), ParseError);                        // missing angle
    EXPECT_THROW(parse_openqasm(qasm("ccx q[0],q[1],q[2];\n")), ParseError);             // unknown gate
    EXPECT_THROW(parse_openqasm(qasm("h q[0]\n")), ParseError);                          // missing ;
    EXPECT_THROW(parse_openqasm(qasm("qreg r[2];\n")), ParseError);                      // second register
    EXPECT_THROW(parse_openqasm(qasm("rz(foo) q[0];\n")), ParseError);                   // unknown identifier
}

TEST(OpenQasm, EvaluatesExpressions) {
    Circuit c = parse_openqasm(qasm("rz(-pi/2 + 2*pi) q[0];\nrz(2^3) q[1];\nrz(-(1+2)*3) q[2];\n"));
    ASSERT_EQ(c.size(), 3u);
    EXPECT_NEAR(c[0].params()[0], 1.5 * std::numbers::pi, 1e-15);
    EXPECT_DOUBLE_EQ(c[1].params()[0], 8.0);
    EXPECT_DOUBLE_EQ(c[2].params()[0], -9.0);
}

TEST(LoadCircuitFile, DispatchesOnContent) {
    const fs::path tmp = fs::temp_directory_path() / "qcsim_parser_test_chain.txt";
    {
        std::ofstream(tmp) << "qubits 2\nH 0\nCNOT 0 1\n";
    }
    Circuit c = load_circuit_file(tmp);
    EXPECT_EQ(c.name(), "qcsim_parser_test_chain");
    EXPECT_EQ(c.size(), 2u);
    fs::remove(tmp);
    EXPECT_THROW(load_circuit_file(fs::temp_directory_path() / "qcsim_no_such_file.txt"), std::runtime_error);
}

}  // namespace
}  // namespace qcsim
