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

#include "qcsim/memory.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

#include "qcsim/common.hpp"

namespace qcsim {

std::uint64_t memory_bytes(std::size_t n) {
    if (n > 59) {
        throw std::overflow_error("memory_bytes: 2^(" + std::to_string(n) + "+4) does not fit in 64 bits");
    }
    return std::uint64_t{1} << (n + 4);
}

void check_budget(std::uint64_t required, std::uint64_t budget) {
    if (required > budget) {
        throw MemoryBudgetError(required, budget);
    }
}

namespace memory_tracking {

namespace {
std::atomic<std::uint64_t> g_live{0};
std::atomic<std::uint64_t> g_peak{0};
}  // namespace

std::uint64_t live_bytes() noexcept {
    return g_live.load();
}

std::uint64_t peak_bytes() noexcept {
    return g_peak.load();
}

void reset_peak() noexcept {
    g_peak.store(g_live.load());
}

void on_allocate(std::size_t bytes) noexcept {
    std::uint64_t now = g_live.fetch_add(bytes) + bytes;
    std::uint64_t peak = g_peak.load();
    while (now > peak && !g_peak.compare_exchange_weak(peak, now)) {
    }
}

void on_deallocate(std::size_t bytes) noexcept {
    g_live.fetch_sub(bytes);
}

}  // namespace memory_tracking

}  // namespace qcsim
