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

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "qcsim/common.hpp"

namespace qcsim::harness::detail {

/// "0-3;4,6" style text for a list of blocks.
inline std::string format_partition(const std::vector<std::vector<Qubit>> &blocks) {
    std::string out;
    for (const auto &block : blocks) {
        if (!out.empty()) {
            out += ';';
        }
        std::string text;
        for (std::size_t i = 0; i < block.size();) {
            std::size_t j = i;
            while (j + 1 < block.size() && block[j + 1] == block[j] + 1) {
                ++j;
            }
            if (!text.empty()) {
                text += ',';
            }
            text += std::to_string(block[i]);
            if (j > i) {
                text += '-' + std::to_string(block[j]);
            }
            i = j + 1;
        }
        out += text;
    }
    return out;
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// Median over `repeats` runs of body(), each after an untimed setup().
template <class Setup, class Body>
double median_seconds(int repeats, Setup &&setup, Body &&body) {
    std::vector<double> times;
    for (int r = 0; r < std::max(repeats, 1); ++r) {
        setup();
        auto start = std::chrono::steady_clock::now();
        body();
        times.push_back(seconds_since(start));
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

}  // namespace qcsim::harness::detail
