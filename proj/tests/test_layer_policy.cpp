// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "uigraph/layer_policy.hpp"
#include "uigraph/serialize.hpp"

using namespace uigraph;

namespace {
std::size_t trues(const LayerSchedule& s) { return static_cast<std::size_t>(std::count(s.flags.begin(), s.flags.end(), true)); }
}  // namespace

TEST(LayerSchedule, AllLayers) {
    const auto s = make_schedule(28, InsertionStrategy::All, 28);
    EXPECT_EQ(trues(s), 28u);
    // "all" overrides whatever count was passed.
    EXPECT_EQ(trues(make_schedule(28, InsertionStrategy::All, 3)), 28u);
}

TEST(LayerSchedule, CrossAlternatesFromZero) {
    const auto s = make_schedule(28, InsertionStrategy::Cross, 14);
    ASSERT_EQ(s.flags.size(), 28u);
    for (std::size_t i = 0; i < 28; ++i) EXPECT_EQ(s.flags[i], i % 2 == 0) << i;
    EXPECT_EQ(trues(s), 14u);
}

TEST(LayerSchedule, EarlyAndLate) {
    EXPECT_EQ(make_schedule(4, InsertionStrategy::Early, 2).flags, (std::vector<bool>{true, true, false, false}));
    EXPECT_EQ(make_schedule(4, InsertionStrategy::Late, 2).flags, (std::vector<bool>{false, false, true, true}));
}

TEST(LayerSchedule, CrossTruncates) {
    EXPECT_EQ(make_schedule(6, InsertionStrategy::Cross, 2).flags,
              (std::vector<bool>{true, false, true, false, false, false}));
}

TEST(LayerSchedule, Errors) {
    for (auto s : {InsertionStrategy::Early, InsertionStrategy::Late, InsertionStrategy::Cross}) {
        try {
            make_schedule(4, s, 5);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::CountExceedsLayers);
        }
        EXPECT_THROW(make_schedule(4, s, 0), Error);
    }
    EXPECT_THROW(make_schedule(4, InsertionStrategy::Cross, 3), Error);  // only 2 alternating slots
    EXPECT_NO_THROW(make_schedule(5, InsertionStrategy::Cross, 3));
    EXPECT_THROW(make_schedule(0, InsertionStrategy::All, 0), Error);
    EXPECT_THROW(parse_strategy("middle"), Error);
}

TEST(LayerSchedule, CountInvariantAllSizes) {
    for (std::size_t n = 1; n <= 40; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            EXPECT_EQ(trues(make_schedule(n, InsertionStrategy::Early, k)), k);
            EXPECT_EQ(trues(make_schedule(n, InsertionStrategy::Late, k)), k);
            if (k <= (n + 1) / 2) {
                const auto cross = make_schedule(n, InsertionStrategy::Cross, k);
                EXPECT_EQ(trues(cross), k);
                // Alternation and a prefix coincide only when one layer is inserted.
                if (k >= 2) EXPECT_NE(cross.flags, make_schedule(n, InsertionStrategy::Early, k).flags);
            }
        }
    }
}

TEST(LayerSchedule, Json) {
    const auto j = schedule_to_json(make_schedule(4, InsertionStrategy::Cross, 2));
    EXPECT_EQ(j.at("strategy"), "cross");
    EXPECT_EQ(j.at("flags"), nlohmann::json({true, false, true, false}));
    EXPECT_EQ(j.at("schema_version"), 1);
}
