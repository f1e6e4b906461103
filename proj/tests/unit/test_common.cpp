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

#include "qcsim/common.hpp"
#include "qcsim/memory.hpp"
#include "qcsim/rng.hpp"

namespace qcsim {
namespace {

TEST(Bitstring, RightmostCharacterIsQubitZero) {
    Bitstring b = Bitstring::from_string("011");
    EXPECT_EQ(b.width(), 3u);
    EXPECT_TRUE(b.get(0));
    EXPECT_TRUE(b.get(1));
    EXPECT_FALSE(b.get(2));
    EXPECT_EQ(b.to_index(), 3u);
    EXPECT_EQ(Bitstring::from_string("10").to_index(), 2u);
}

TEST(Bitstring, IndexRoundTrip) {
    for (std::uint64_t i = 0; i < 64; ++i) {
        Bitstring b = Bitstring::from_index(i, 6);
        EXPECT_EQ(b.to_index(), i);
        EXPECT_EQ(Bitstring::from_string(b.to_string()), b);
    }
    EXPECT_EQ(format_bits(5, 4), "0101");
    EXPECT_EQ(Bitstring::all_ones(3).to_string(), "111");
    EXPECT_EQ(Bitstring(3).to_string(), "000");
}

TEST(Bitstring, WideLabels) {
    Bitstring b = Bitstring::all_ones(128);
    EXPECT_EQ(b.to_string(), std::string(128, '1'));
    EXPECT_THROW(b.to_index(), std::out_of_range);
}

TEST(Bitstring, RejectsOtherCharacters) {
    EXPECT_THROW(Bitstring::from_string("01x"), std::invalid_argument);
    EXPECT_THROW(Bitstring::from_string("0 1"), std::invalid_argument);
}

TEST(SplitMix64, MatchesPublishedSequence) {
    SplitMix64 zero(0);
    EXPECT_EQ(zero.next(), 0xE220A8397B1DCDAFULL);

    SplitMix64 rng(1234567);
    const std::uint64_t expected[] = {6457827717110365317ULL, 3203168211198807973ULL, 9817491932198370423ULL,
                                      4593380528125082431ULL, 16408922859458223821ULL};
    for (std::uint64_t e : expected) {
        EXPECT_EQ(rng.next(), e);
    }
}

TEST(SplitMix64, BoundedDrawsStayInRange) {
    SplitMix64 rng(99);
    for (std::uint64_t n : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL, 1ULL << 40}) {
        for (int k = 0; k < 2000; ++k) {
            EXPECT_LT(rng.below(n), n);
            double u = rng.uniform();
            EXPECT_GE(u, 0.0);
            EXPECT_LT(u, 1.0);
        }
    }
}

TEST(SplitMix64, BelowIsRoughlyUniform) {
    SplitMix64 rng(5);
    std::array<int, 6> counts{};
    const int draws = 60000;
    for (int k = 0; k < draws; ++k) {
        ++counts[rng.below(6)];
    }
    for (int c : counts) {
        EXPECT_NEAR(c, draws / 6, 400);
    }
}

TEST(Errors, ParseErrorCarriesPosition) {
    ParseError e("bad token", 7, 3);
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos);
}

TEST(Memory, ExactStateBytes) {
    EXPECT_EQ(memory_bytes(10), 1ULL << 14);
    EXPECT_EQ(memory_bytes(30), 16ULL << 30);
    EXPECT_THROW(memory_bytes(60), std::overflow_error);
}

TEST(Memory, BudgetCheck) {
    EXPECT_NO_THROW(check_budget(100, 100));
    try {
        check_budget(101, 100);
        FAIL() << "expected a refusal";
    } catch (const MemoryBudgetError &e) {
        EXPECT_EQ(e.required_bytes(), 101u);
        EXPECT_EQ(e.budget_bytes(), 100u);
    }
}

TEST(Memory, TrackingAllocatorCountsLiveAndPeak) {
    const std::uint64_t before = memory_tracking::live_bytes();
    memory_tracking::reset_peak();
    {
        tracked_vector<double> v(1000);
        EXPECT_EQ(memory_tracking::live_bytes() - before, 8000u);
        EXPECT_GE(memory_tracking::peak_bytes(), before + 8000);
    }
    EXPECT_EQ(memory_tracking::live_bytes(), before);
}

}  // namespace
}  // namespace qcsim
