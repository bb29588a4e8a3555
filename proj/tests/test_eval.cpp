// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "uigraph/eval.hpp"

using namespace uigraph;

namespace {
const Box kBox{0.1, 0.1, 0.3, 0.3};
GroundingCase at(double x, double y) { return {"q", kBox, {x, y}, {}}; }
}  // namespace

TEST(ScoreGrounding, PointInBox) {
    EXPECT_TRUE(score_grounding(at(0.2, 0.2)));
    EXPECT_TRUE(score_grounding(at(0.1, 0.2)));  // edge counts
    EXPECT_TRUE(score_grounding(at(0.3, 0.3)));
    EXPECT_FALSE(score_grounding(at(0.31, 0.2)));
    EXPECT_FALSE(score_grounding(at(0.2, 0.05)));
}

TEST(ScoreGrounding, MonotoneUnderEnlargement) {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        double x0 = u(gen), x1 = u(gen), y0 = u(gen), y1 = u(gen);
        if (x0 > x1) std::swap(x0, x1);
        if (y0 > y1) std::swap(y0, y1);
        const Box inner{x0, y0, x1, y1};
        const Box outer{x0 * u(gen), y0 * u(gen), x1 + (1 - x1) * u(gen), y1 + (1 - y1) * u(gen)};
        const std::array p{u(gen), u(gen)};
        if (point_in_box(p, inner)) EXPECT_TRUE(point_in_box(p, outer));
    }
}

TEST(ScoreStep, IdenticalClicks) {
    const ActionRecord click{"CLICK", std::nullopt, std::array{0.2, 0.2}};
    const auto s = score_step(click, click, kBox, web_space());
    EXPECT_TRUE(s.element_correct);
    EXPECT_DOUBLE_EQ(s.op_f1, 1.0);
    EXPECT_TRUE(s.step_success);
}

TEST(ScoreStep, TypeTokenF1) {
    // pred {type, hello} vs gt {type, hello, world}: P = 1, R = 2/3, F1 = 0.8.
    const ActionRecord pred{"TYPE", "hello", std::array{0.2, 0.2}};
    const ActionRecord gt{"TYPE", "hello world", std::array{0.2, 0.2}};
    const auto s = score_step(pred, gt, kBox, web_space());
    EXPECT_NEAR(s.op_f1, 0.8, 1e-12);
    EXPECT_TRUE(s.element_correct);
    EXPECT_FALSE(s.step_success);
}

TEST(ScoreStep, WrongActionType) {
    const ActionRecord pred{"CLICK", std::nullopt, std::array{0.2, 0.2}};
    const ActionRecord gt{"TYPE", "abc", std::array{0.2, 0.2}};
    const auto s = score_step(pred, gt, kBox, web_space());
    EXPECT_TRUE(s.element_correct);
    EXPECT_FALSE(s.step_success);
}

TEST(ScoreStep, ValueCaseInsensitive) {
    const ActionRecord pred{"SELECT", "Economy", std::array{0.2, 0.2}};
    const ActionRecord gt{"SELECT", "economy", std::array{0.2, 0.2}};
    EXPECT_TRUE(score_step(pred, gt, kBox, web_space()).step_success);
}

TEST(ScoreStep, ElementRules) {
    const ActionRecord gt{"CLICK", std::nullopt, std::array{0.2, 0.2}};
    const ActionRecord outside{"CLICK", std::nullopt, std::array{0.9, 0.9}};
    EXPECT_FALSE(score_step(outside, gt, kBox, web_space()).element_correct);
    EXPECT_FALSE(score_step(gt, gt, std::nullopt, web_space()).element_correct);  // no box, no credit
    // Position-free ground truth: element trivially correct.
    const ActionRecord home{"PRESS HOME", std::nullopt, std::nullopt};
    EXPECT_TRUE(score_step(home, home, std::nullopt, mobile_space()).step_success);
}

TEST(ScoreStep, SpaceMismatch) {
    const ActionRecord home{"PRESS HOME", std::nullopt, std::nullopt};
    const ActionRecord click{"CLICK", std::nullopt, std::array{0.2, 0.2}};
    try {
        score_step(home, click, kBox, web_space());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SpaceMismatch);
    }
}

TEST(ScoreStep, StepSuccessImpliesElement) {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto space = web_space();
    const char* names[] = {"CLICK", "TYPE", "SELECT"};
    const char* words[] = {"a", "b", "A", "c d"};
    for (int i = 0; i < 2000; ++i) {
        auto make = [&] {
            ActionRecord r{names[gen() % 3], std::nullopt, std::array{u(gen), u(gen)}};
            if (r.action != "CLICK") r.value = words[gen() % 4];
            return r;
        };
        const auto pred = make(), gt = make();
        const auto s = score_step(pred, gt, Box{0.2, 0.2, 0.8, 0.8}, space);
        if (s.step_success) EXPECT_TRUE(s.element_correct);
        EXPECT_DOUBLE_EQ(operation_f1(pred, gt), operation_f1(gt, pred));
        auto a = operation_tokens(pred), b = operation_tokens(gt);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(operation_f1(pred, gt) == 1.0, a == b);
    }
}

TEST(Aggregate, SingleCorrectCase) {
    const std::vector<ScoredItem> items{{{}, {1.0}}};
    const auto t = aggregate(items, {"Acc"});
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.rows[0].split, "all");
    EXPECT_DOUBLE_EQ(t.average[0], 100.0);
}

TEST(Aggregate, ScreenspotMacroAverage) {
    const std::vector<double> cells{92.3, 75.5, 76.3, 61.1, 81.7, 63.6};
    EXPECT_NEAR(macro_average(cells), 75.0833, 1e-4);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%.1f", macro_average(cells));
    EXPECT_STREQ(buf, "75.1");
}

TEST(Aggregate, PerSplitAndMacro) {
    // 3 mobile/text cases (2 correct), 1 web/icon case (wrong).
    const std::vector<ScoredItem> items{{{"mobile", "text"}, {1}}, {{"mobile", "text"}, {1}},
                                        {{"mobile", "text"}, {0}}, {{"web", "icon"}, {0}}};
    const auto t = aggregate(items, {"Acc"}, {Split::parse("mobile&text"), Split::parse("web&icon"),
                                              Split::parse("desktop&text")});
    ASSERT_EQ(t.rows.size(), 2u);  // empty desktop bucket omitted
    EXPECT_EQ(t.rows[0].count, 3u);
    EXPECT_NEAR(t.rows[0].values[0], 200.0 / 3.0, 1e-12);
    EXPECT_NEAR(t.average[0], (200.0 / 3.0 + 0.0) / 2.0, 1e-12);
    const auto text = format_table(t);
    EXPECT_NE(text.find("mobile&text"), std::string::npos);
    EXPECT_EQ(text.find("desktop"), std::string::npos);
}

TEST(Aggregate, ConstantScores) {
    std::vector<ScoredItem> items;
    for (int i = 0; i < 10; ++i) items.push_back({{i % 2 ? "a" : "b"}, {0.37, 0.37}});
    const auto t = aggregate(items, {"x", "y"});
    for (const auto& row : t.rows)
        for (double v : row.values) EXPECT_NEAR(v, 37.0, 1e-9);
    EXPECT_NEAR(t.average[1], 37.0, 1e-9);
}

TEST(Aggregate, Errors) {
    EXPECT_THROW(aggregate({}, {"Acc"}), Error);
    const std::vector<ScoredItem> items{{{}, {1.0, 2.0}}};
    EXPECT_THROW(aggregate(items, {"Acc"}), Error);
}
