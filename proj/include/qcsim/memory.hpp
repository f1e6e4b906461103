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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace qcsim {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{4} << 30;

/// Bytes of amplitude storage for an exact n-qubit state: 2^(n+4)
/// (2^n complex numbers of two 8-byte reals). Valid for n <= 59.
std::uint64_t memory_bytes(std::size_t n);

/// Throws MemoryBudgetError if `required` exceeds `budget`.
void check_budget(std::uint64_t required, std::uint64_t budget);

namespace memory_tracking {

/// Amplitude and code arrays allocated through TrackingAllocator.
std::uint64_t live_bytes() noexcept;
std::uint64_t peak_bytes() noexcept;
void reset_peak() noexcept;

void on_allocate(std::size_t bytes) noexcept;
void on_deallocate(std::size_t bytes) noexcept;

}  // namespace memory_tracking

/// std::allocator that reports its traffic to memory_tracking, so tests and
/// the bench harness can measure state storage directly.
template <class T>
struct TrackingAllocator {
    using value_type = T;

    TrackingAllocator() noexcept = default;
    template <class U>
    TrackingAllocator(const TrackingAllocator<U> &) noexcept {
    }

    T *allocate(std::size_t n) {
        T *p = std::allocator<T>{}.allocate(n);
        memory_tracking::on_allocate(n * sizeof(T));
        return p;
    }
    void deallocate(T *p, std::size_t n) noexcept {
        memory_tracking::on_deallocate(n * sizeof(T));
        std::allocator<T>{}.deallocate(p, n);
    }

    template <class U>
    bool operator==(const TrackingAllocator<U> &) const noexcept {
        return true;
    }
};

template <class T>
using tracked_vector = std::vector<T, TrackingAllocator<T>>;

}  // namespace qcsim
