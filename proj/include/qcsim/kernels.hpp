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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qcsim/gate.hpp"

// In-place kernels over a dense block of 2^n amplitudes. A "bit" is the
// position of a qubit inside the block index. Every kernel visits disjoint
// index groups, so splitting the outer loop across threads is race-free and
// gives bitwise-identical results for any thread count.

namespace qcsim::kernels {

/// Below this many index groups the OpenMP region is skipped.
inline constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 14;

constexpr std::uint64_t insert_zero_bit(std::uint64_t k, unsigned bit) noexcept {
    std::uint64_t low = k & ((std::uint64_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

/// Calls f(i0, i1) for every index pair differing only in `bit`, i0 having it clear.
template <class F>
void for_each_pair(std::size_t dim, unsigned bit, F &&f, int threads = 1) {
    const std::int64_t half = static_cast<std::int64_t>(dim / 2);
    const std::uint64_t mask = std::uint64_t{1} << bit;
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1 && half >= kParallelThreshold)
    for (std::int64_t k = 0; k < half; ++k) {
        std::uint64_t i0 = insert_zero_bit(static_cast<std::uint64_t>(k), bit);
        f(i0, i0 | mask);
    }
}

/// Calls f(base) for every index with both `bit_a` and `bit_b` clear.
template <class F>
void for_each_quad(std::size_t dim, unsigned bit_a, unsigned bit_b, F &&f, int threads = 1) {
    const unsigned lo = bit_a < bit_b ? bit_a : bit_b;
    const unsigned hi = bit_a < bit_b ? bit_b : bit_a;
    const std::int64_t quarter = static_cast<std::int64_t>(dim / 4);
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1 && quarter >= kParallelThreshold)
    for (std::int64_t k = 0; k < quarter; ++k) {
        f(insert_zero_bit(insert_zero_bit(static_cast<std::uint64_t>(k), lo), hi));
    }
}

inline void apply_matrix(std::span<Complex> amps, unsigned bit, const Matrix2 &m, int threads = 1) {
    for_each_pair(
        amps.size(), bit,
        [&](std::uint64_t i0, std::uint64_t i1) {
            Complex a0 = amps[i0], a1 = amps[i1];
            amps[i0] = m[0] * a0 + m[1] * a1;
            amps[i1] = m[2] * a0 + m[3] * a1;
        },
        threads);
}

inline void apply_diagonal(std::span<Complex> amps, unsigned bit, Complex d0, Complex d1, int threads = 1) {
    if (d0 == Complex{1, 0}) {
        for_each_pair(amps.size(), bit, [&](std::uint64_t, std::uint64_t i1) { amps[i1] *= d1; }, threads);
        return;
    }
    for_each_pair(
        amps.size(), bit,
        [&](std::uint64_t i0, std::uint64_t i1) {
            amps[i0] *= d0;
            amps[i1] *= d1;
        },
        threads);
}

inline void apply_x(std::span<Complex> amps, unsigned bit, int threads = 1) {
    for_each_pair(amps.size(), bit, [&](std::uint64_t i0, std::uint64_t i1) { std::swap(amps[i0], amps[i1]); }, threads);
}

inline void apply_cz(std::span<Complex> amps, unsigned bit_a, unsigned bit_b, int threads = 1) {
    const std::uint64_t both = (std::uint64_t{1} << bit_a) | (std::uint64_t{1} << bit_b);
    for_each_quad(amps.size(), bit_a, bit_b, [&](std::uint64_t base) { amps[base | both] = -amps[base | both]; }, threads);
}

inline void apply_cnot(std::span<Complex> amps, unsigned control, unsigned target, int threads = 1) {
    const std::uint64_t c = std::uint64_t{1} << control, t = std::uint64_t{1} << target;
    for_each_quad(
        amps.size(), control, target, [&](std::uint64_t base) { std::swap(amps[base | c], amps[base | c | t]); },
        threads);
}

inline void apply_swap(std::span<Complex> amps, unsigned bit_a, unsigned bit_b, int threads = 1) {
    const std::uint64_t a = std::uint64_t{1} << bit_a, b = std::uint64_t{1} << bit_b;
    for_each_quad(amps.size(), bit_a, bit_b, [&](std::uint64_t base) { std::swap(amps[base | a], amps[base | b]); }, threads);
}

/// Applies `gate` with its qubits placed at `bits` (one entry per gate qubit).
inline void apply_gate(std::span<Complex> amps, const Gate &gate, std::span<const unsigned> bits, int threads = 1) {
    switch (gate.kind()) {
        case GateKind::I:
            return;
        case GateKind::X:
            return apply_x(amps, bits[0], threads);
        case GateKind::CZ:
            return apply_cz(amps, bits[0], bits[1], threads);
        case GateKind::CNOT:
            return apply_cnot(amps, bits[0], bits[1], threads);
        case GateKind::SWAP:
            return apply_swap(amps, bits[0], bits[1], threads);
        default:
            break;
    }
    if (gate.is_diagonal()) {
        auto d = gate.diagonal();
        return apply_diagonal(amps, bits[0], d[0], d[1], threads);
    }
    apply_matrix(amps, bits[0], gate.matrix(), threads);
}

}  // namespace qcsim::kernels

namespace qcsim::kernels {

/// Sums partial(begin, end) over fixed-size chunks of [0, count) and adds the
/// chunk results in chunk order, so the value does not depend on `threads`.
template <class T, class F>
T chunked_reduce(std::int64_t count, F &&partial, int threads = 1, std::int64_t chunk = 4096) {
    const std::int64_t kChunk = chunk;
    const std::int64_t chunks = (count + kChunk - 1) / kChunk;
    std::vector<T> sums(static_cast<std::size_t>(chunks), T{});
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1 && chunks > 4)
    for (std::int64_t c = 0; c < chunks; ++c) {
        std::int64_t begin = c * kChunk;
        std::int64_t end = begin + kChunk < count ? begin + kChunk : count;
        sums[static_cast<std::size_t>(c)] = partial(begin, end);
    }
    T total{};
    for (const T &s : sums) {
        total += s;
    }
    return total;
}

}  // namespace qcsim::kernels
