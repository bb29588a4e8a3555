// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "uigraph/action.hpp"
#include "uigraph/error.hpp"

namespace uigraph {

inline constexpr std::size_t kDefaultHistory = 2;
inline constexpr const char* kImageToken = "<image>";
inline constexpr const char* kOmittedImageToken = "<omitted_image>";
inline constexpr const char* kGroundingSystemPrompt =
    "Based on the screenshot, locate the element described by each query and answer with an action dictionary "
    "{'action': 'action_type', 'value': 'element', 'position': [x,y]}. "
    "Position represents the relative coordinates on the screenshot and should be scaled to a range of 0-1.";

enum class SpanKind { SystemText, TaskText, ImageSlot, OmittedImage, ActionText, QueryText };

inline constexpr std::string_view span_kind_name(SpanKind k) noexcept {
    switch (k) {
    case SpanKind::SystemText: return "system_text";
    case SpanKind::TaskText: return "task_text";
    case SpanKind::ImageSlot: return "image_slot";
    case SpanKind::OmittedImage: return "omitted_image";
    case SpanKind::ActionText: return "action_text";
    case SpanKind::QueryText: return "query_text";
    }
    return "system_text";
}

inline SpanKind parse_span_kind(std::string_view name) {
    for (auto k : {SpanKind::SystemText, SpanKind::TaskText, SpanKind::ImageSlot, SpanKind::OmittedImage,
                   SpanKind::ActionText, SpanKind::QueryText}) {
        if (span_kind_name(k) == name) {
            return k;
        }
    }
    throw Error(Errc::ParseError, "unknown span kind '" + std::string(name) + "'");
}

struct Span {
    SpanKind kind;
    std::string text;
    std::optional<std::string> image;  // set on image_slot and omitted_image spans

    friend bool operator==(const Span&, const Span&) = default;
};

/// Ordered spans plus a parallel supervision mask.
struct InterleavedSequence {
    std::vector<Span> spans;
    std::vector<bool> loss_mask;

    void push(Span span, bool supervised = false) {
        spans.push_back(std::move(span));
        loss_mask.push_back(supervised);
    }

    std::size_t supervised_count() const { return static_cast<std::size_t>(std::count(loss_mask.begin(), loss_mask.end(), true)); }

    std::size_t count(SpanKind kind) const {
        return static_cast<std::size_t>(
            std::count_if(spans.begin(), spans.end(), [kind](const Span& s) { return s.kind == kind; }));
    }

    friend bool operator==(const InterleavedSequence&, const InterleavedSequence&) = default;
};

struct EpisodeStep {
    std::string image;
    ActionRecord action;
};

struct Episode {
    std::string device;
    std::string task;
    std::vector<EpisodeStep> steps;
};

struct NavigationOptions {
    std::size_t history_n = kDefaultHistory;
    bool mask_visual_history = false;
};

namespace detail {

inline Span image_span(const std::string& ref) { return {SpanKind::ImageSlot, kImageToken, ref}; }
inline Span action_span(const ActionRecord& rec) { return {SpanKind::ActionText, serialize_action(rec), std::nullopt}; }

}  // namespace detail

/// One sequence per step t: README, task, the last min(t-1, history_n)
/// (image, action) pairs, the current image, then the supervised target action.
/// History images become placeholders when `mask_visual_history` is set.
inline std::vector<InterleavedSequence> pack_navigation(const Episode& ep, const ActionSpace& space,
                                                        NavigationOptions opts = {}) {
    if (ep.steps.empty()) {
        throw Error(Errc::InvalidEpisode, "episode has no steps");
    }
    for (std::size_t i = 0; i < ep.steps.size(); ++i) {
        auto violations = validate_action(ep.steps[i].action, space);
        if (!violations.empty()) {
            throw Error(Errc::InvalidEpisode, "step " + std::to_string(i + 1) + ": " + violations.front().message);
        }
    }

    const std::string system = render_system_prompt(space, ep.device);
    const std::string task = render_task_line(ep.task);
    std::vector<InterleavedSequence> out;
    out.reserve(ep.steps.size());
    for (std::size_t t = 0; t < ep.steps.size(); ++t) {
        InterleavedSequence seq;
        seq.push({SpanKind::SystemText, system, std::nullopt});
        seq.push({SpanKind::TaskText, task, std::nullopt});
        const std::size_t first = t - std::min(t, opts.history_n);
        for (std::size_t h = first; h < t; ++h) {
            const auto& past = ep.steps[h];
            if (opts.mask_visual_history) {
                seq.push({SpanKind::OmittedImage, kOmittedImageToken, past.image});
            } else {
                seq.push(detail::image_span(past.image));
            }
            seq.push(detail::action_span(past.action));
        }
        seq.push(detail::image_span(ep.steps[t].image));
        seq.push(detail::action_span(ep.steps[t].action), true);
        out.push_back(std::move(seq));
    }
    return out;
}

struct GroundingPair {
    std::string query;
    ActionRecord action;
};

/// Multi-turn grounding: one screenshot, up to `max_turns` query/action turns
/// per sequence, every action supervised.
inline std::vector<InterleavedSequence> pack_grounding(const std::string& image_ref,
                                                       const std::vector<GroundingPair>& pairs,
                                                       std::size_t max_turns, const ActionSpace& space,
                                                       std::string_view system_prompt = kGroundingSystemPrompt) {
    if (pairs.empty()) {
        throw Error(Errc::InvalidArgument, "no query/action pairs to pack");
    }
    if (max_turns == 0) {
        throw Error(Errc::InvalidArgument, "max_turns must be >= 1");
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto violations = validate_action(pairs[i].action, space);
        if (!violations.empty()) {
            throw Error(Errc::InvalidAction, "pair " + std::to_string(i + 1) + ": " + violations.front().message);
        }
    }

    std::vector<InterleavedSequence> out;
    for (std::size_t begin = 0; begin < pairs.size(); begin += max_turns) {
        const std::size_t end = std::min(pairs.size(), begin + max_turns);
        InterleavedSequence seq;
        seq.push({SpanKind::SystemText, std::string(system_prompt), std::nullopt});
        seq.push(detail::image_span(image_ref));
        for (std::size_t i = begin; i < end; ++i) {
            seq.push({SpanKind::QueryText, pairs[i].query, std::nullopt});
            seq.push(detail::action_span(pairs[i].action), true);
        }
        out.push_back(std::move(seq));
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

inline Episode episode_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array()) {
        throw Error(Errc::InvalidEpisode, "episode needs a \"steps\" list");
    }
    Episode ep;
    ep.device = j.value("device", std::string{});
    ep.task = j.value("task", std::string{});
    for (const auto& step : j.at("steps")) {
        if (!step.is_object() || !step.contains("image") || !step.contains("action")) {
            throw Error(Errc::InvalidEpisode, "each step needs \"image\" and \"action\"");
        }
        ep.steps.push_back({step.at("image").get<std::string>(), action_from_json(step.at("action"))});
    }
    return ep;
}

inline nlohmann::json episode_to_json(const Episode& ep) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : ep.steps) {
        steps.push_back({{"image", s.image}, {"action", action_to_json(s.action)}});
    }
    return {{"device", ep.device}, {"task", ep.task}, {"steps", std::move(steps)}};
}

inline nlohmann::json sequence_to_json(const InterleavedSequence& seq) {
    nlohmann::json spans = nlohmann::json::array();
    for (const auto& s : seq.spans) {
        spans.push_back({{"kind", span_kind_name(s.kind)},
                         {"text", s.text},
                         {"image", s.image ? nlohmann::json(*s.image) : nlohmann::json(nullptr)}});
    }
    return {{"schema_version", 1}, {"spans", std::move(spans)}, {"loss_mask", seq.loss_mask}};
}

inline InterleavedSequence sequence_from_json(const nlohmann::json& j) {
    InterleavedSequence seq;
    const auto& spans = j.at("spans");
    const auto& mask = j.at("loss_mask");
    if (spans.size() != mask.size()) {
        throw Error(Errc::LengthMismatch, "spans and loss_mask differ in length");
    }
    for (std::size_t i = 0; i < spans.size(); ++i) {
        const auto& s = spans[i];
        Span span{parse_span_kind(s.at("kind").get<std::string>()), s.at("text").get<std::string>(), std::nullopt};
        if (s.contains("image") && !s.at("image").is_null()) {
            span.image = s.at("image").get<std::string>();
        }
        seq.push(std::move(span), mask[i].get<bool>());
    }
    return seq;
}

}  // namespace uigraph
