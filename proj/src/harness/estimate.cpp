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

#include <cmath>
#include <cstdio>

#include "qcsim/codec.hpp"
#include "qcsim/harness.hpp"
#include "qcsim/pathsum.hpp"

namespace qcsim::harness {

using nlohmann::json;

namespace {

std::string human(double bytes) {
    static const char *decimal[] = {"B", "kB", "MB", "GB", "TB", "PB", "EB", "ZB", "YB"};
    static const char *binary[] = {"B", "KiB", "MiB", "GiB", "TiB", "PiB", "EiB", "ZiB", "YiB"};
    int d = 0, b = 0;
    double dv = bytes, bv = bytes;
    while (dv >= 1000 && d < 8) {
        dv /= 1000;
        ++d;
    }
    while (bv >= 1024 && b < 8) {
        bv /= 1024;
        ++b;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.3g %s (%.3g %s)", dv, decimal[d], bv, binary[b]);
    return buf;
}

}  // namespace

json estimate(std::size_t n, Backend backend, const std::optional<std::string> &partitions, std::size_t m, int ranks) {
    if (n < 1 || n > 1000) {
        throw ConfigError("qubit count must be in 1..1000");
    }
    if (m < 1 || ranks < 1) {
        throw ConfigError("M and ranks must be at least 1");
    }
    json out = {{"num_qubits", n}, {"backend", to_string(backend)}};
    const double exact = std::ldexp(1.0, static_cast<int>(n) + 4);
    switch (backend) {
        case Backend::Exact:
            out["bytes"] = exact;
            out["human"] = human(exact);
            break;
        case Backend::Adaptive: {
            const double codes = std::ldexp(1.0, static_cast<int>(n) + 1);
            const double table = Codebook::kCapacity * sizeof(double);
            out["code_bytes"] = codes;
            out["table_bytes"] = table;
            out["bytes"] = codes + table;
            out["human"] = human(codes + table);
            out["reduction_vs_exact"] = exact / (codes + table);
            break;
        }
        case Backend::PathSum: {
            auto blocks = partitions ? parse_partition_spec(*partitions, n) : default_bisection(n);
            std::size_t widest = 0;
            std::vector<bool> seen(n, false);
            for (const auto &block : blocks) {
                widest = std::max(widest, block.size());
                for (Qubit q : block) {
                    if (seen[q]) {
                        throw ConfigError("qubit " + std::to_string(q) + " appears in more than one block");
                    }
                    seen[q] = true;
                }
            }
            if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
                throw ConfigError("partition does not cover every qubit");
            }
            const double per_rank = std::max(std::ldexp(1.0, static_cast<int>(widest)), static_cast<double>(m)) * 16;
            out["max_block_width"] = widest;
            out["M"] = m;
            out["ranks"] = ranks;
            out["bytes_per_rank"] = per_rank;
            out["bytes"] = per_rank * ranks;
            out["human"] = human(per_rank * ranks);
            break;
        }
    }
    return out;
}

}  // namespace qcsim::harness
