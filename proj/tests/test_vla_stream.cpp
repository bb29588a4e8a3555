// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "uigraph/vla_stream.hpp"

using namespace uigraph;

namespace {

Episode web_episode(std::size_t steps) {
    Episode ep{"web", "book a flight", {}};
    for (std::size_t i = 0; i < steps; ++i) {
        ep.steps.push_back({"shot_" + std::to_string(i + 1) + ".png",
                            {"CLICK", std::nullopt, std::array{0.1 * static_cast<double>(i + 1), 0.5}}});
    }
    return ep;
}

std::vector<SpanKind> kinds(const InterleavedSequence& s) {
    std::vector<SpanKind> out;
    for (const auto& span : s.spans) out.push_back(span.kind);
    return out;
}

using K = SpanKind;

}  // namespace

TEST(PackNavigation, SingleStep) {
    const auto seqs = pack_navigation(web_episode(1), web_space(), {2, false});
    ASSERT_EQ(seqs.size(), 1u);
    EXPECT_EQ(kinds(seqs[0]), (std::vector<K>{K::SystemText, K::TaskText, K::ImageSlot, K::ActionText}));
    EXPECT_EQ(seqs[0].loss_mask, (std::vector<bool>{false, false, false, true}));
    EXPECT_EQ(seqs[0].spans[2].image, "shot_1.png");
    EXPECT_EQ(seqs[0].spans[1].text, "Task: book a flight");
}

TEST(PackNavigation, ThirdStepCarriesTwoPairs) {
    const auto ep = web_episode(3);
    const auto seqs = pack_navigation(ep, web_space(), {2, false});
    ASSERT_EQ(seqs.size(), 3u);
    const auto& s = seqs[2];
    EXPECT_EQ(kinds(s), (std::vector<K>{K::SystemText, K::TaskText, K::ImageSlot, K::ActionText, K::ImageSlot,
                                        K::ActionText, K::ImageSlot, K::ActionText}));
    EXPECT_EQ(s.spans[2].image, "shot_1.png");
    EXPECT_EQ(s.spans[3].text, serialize_action(ep.steps[0].action));
    EXPECT_EQ(s.spans[4].image, "shot_2.png");
    EXPECT_EQ(s.spans[6].image, "shot_3.png");
    EXPECT_EQ(s.spans[7].text, serialize_action(ep.steps[2].action));
    EXPECT_EQ(s.supervised_count(), 1u);
    EXPECT_TRUE(s.loss_mask.back());
}

TEST(PackNavigation, MaskedHistoryOnlySwapsImages) {
    const auto ep = web_episode(3);
    const auto plain = pack_navigation(ep, web_space(), {2, false});
    const auto masked = pack_navigation(ep, web_space(), {2, true});
    ASSERT_EQ(plain.size(), masked.size());
    for (std::size_t t = 0; t < plain.size(); ++t) {
        ASSERT_EQ(plain[t].spans.size(), masked[t].spans.size());
        EXPECT_EQ(plain[t].loss_mask, masked[t].loss_mask);
        std::size_t swapped = 0;
        for (std::size_t i = 0; i < plain[t].spans.size(); ++i) {
            const auto& a = plain[t].spans[i];
            const auto& b = masked[t].spans[i];
            if (a == b) continue;
            // Only history images differ, and they become placeholders.
            EXPECT_EQ(a.kind, K::ImageSlot);
            EXPECT_EQ(b.kind, K::OmittedImage);
            EXPECT_EQ(b.text, kOmittedImageToken);
            EXPECT_EQ(a.image, b.image);
            EXPECT_LT(i, plain[t].spans.size() - 2);  // the current image is untouched
            ++swapped;
        }
        EXPECT_EQ(swapped, std::min<std::size_t>(t, 2));
    }
}

TEST(PackNavigation, HistoryWindowProperty) {
    for (std::size_t steps = 1; steps <= 7; ++steps) {
        for (std::size_t h = 0; h <= 4; ++h) {
            const auto seqs = pack_navigation(web_episode(steps), web_space(), {h, false});
            ASSERT_EQ(seqs.size(), steps);
            for (std::size_t t = 1; t <= steps; ++t) {
                const auto& s = seqs[t - 1];
                EXPECT_EQ(s.count(K::ActionText), std::min(t - 1, h) + 1);
                EXPECT_EQ(s.count(K::ImageSlot), std::min(t - 1, h) + 1);
                EXPECT_EQ(s.supervised_count(), 1u);
                for (std::size_t i = 0; i < s.spans.size(); ++i)
                    if (s.loss_mask[i]) EXPECT_EQ(s.spans[i].kind, K::ActionText);
            }
        }
    }
}

TEST(PackNavigation, SystemSpanIsReadme) {
    const auto seqs = pack_navigation(web_episode(1), web_space());
    EXPECT_EQ(seqs[0].spans[0].text + seqs[0].spans[1].text, render_readme(web_space(), "web", "book a flight"));
}

TEST(PackNavigation, InvalidEpisodes) {
    try {
        pack_navigation(Episode{"web", "t", {}}, web_space());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidEpisode);
    }
    auto ep = web_episode(2);
    ep.steps[1].action = {"PRESS HOME", std::nullopt, std::nullopt};
    EXPECT_THROW(pack_navigation(ep, web_space()), Error);
}

TEST(PackGrounding, OnePair) {
    const std::vector<GroundingPair> pairs{{"search box", {"CLICK", std::nullopt, std::array{0.4, 0.1}}}};
    const auto seqs = pack_grounding("page.png", pairs, 4, web_space());
    ASSERT_EQ(seqs.size(), 1u);
    EXPECT_EQ(kinds(seqs[0]), (std::vector<K>{K::SystemText, K::ImageSlot, K::QueryText, K::ActionText}));
    EXPECT_EQ(seqs[0].supervised_count(), 1u);
}

TEST(PackGrounding, ChunksByTurns) {
    std::vector<GroundingPair> pairs;
    for (int i = 0; i < 10; ++i) pairs.push_back({"q" + std::to_string(i), {"CLICK", std::nullopt, std::array{0.5, 0.5}}});
    const auto seqs = pack_grounding("page.png", pairs, 4, web_space());
    ASSERT_EQ(seqs.size(), 3u);
    EXPECT_EQ(seqs[0].count(K::QueryText), 4u);
    EXPECT_EQ(seqs[1].count(K::QueryText), 4u);
    EXPECT_EQ(seqs[2].count(K::QueryText), 2u);
    std::size_t supervised = 0;
    for (const auto& s : seqs) {
        supervised += s.supervised_count();
        EXPECT_EQ(s.count(K::ImageSlot), 1u);
        EXPECT_EQ(s.spans[1].image, "page.png");
    }
    EXPECT_EQ(supervised, pairs.size());
    EXPECT_EQ(seqs[2].spans[2].text, "q8");
}

TEST(PackGrounding, Errors) {
    const std::vector<GroundingPair> bad{{"q", {"CLICK", std::nullopt, std::array{1.5, 0.5}}}};
    try {
        pack_grounding("p", bad, 4, web_space());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidAction);
    }
    EXPECT_THROW(pack_grounding("p", {}, 4, web_space()), Error);
    const std::vector<GroundingPair> ok{{"q", {"CLICK", std::nullopt, std::array{0.5, 0.5}}}};
    EXPECT_THROW(pack_grounding("p", ok, 0, web_space()), Error);
}

TEST(StreamJson, EpisodeAndSequenceRoundTrip) {
    const auto ep = web_episode(3);
    const auto back = episode_from_json(episode_to_json(ep));
    ASSERT_EQ(back.steps.size(), 3u);
    // Positions are stored at two decimals; 0.1 * 3 is not exactly 0.3.
    EXPECT_EQ(back.steps[2].action, parse_action(serialize_action(ep.steps[2].action)));
    EXPECT_DOUBLE_EQ((*back.steps[2].action.position)[0], 0.3);
    for (const auto& seq : pack_navigation(ep, web_space(), {2, true})) {
        EXPECT_EQ(sequence_from_json(sequence_to_json(seq)), seq);
    }
    EXPECT_THROW(episode_from_json(nlohmann::json{{"device", "web"}}), Error);
}
