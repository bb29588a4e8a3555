// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uigraph/error.hpp"
#include "uigraph/rng.hpp"
#include "uigraph/ui_graph.hpp"

namespace uigraph {

/// Ablation default; training pipelines typically run at kTrainingRatio.
inline constexpr double kDefaultRatio = 0.5;
inline constexpr double kTrainingRatio = 0.75;

enum class SelectionMode { TrainingRandom, InferenceUniform, BaselineRandom, None };

inline constexpr std::string_view mode_name(SelectionMode mode) noexcept {
    switch (mode) {
    case SelectionMode::TrainingRandom: return "training-random";
    case SelectionMode::InferenceUniform: return "inference-uniform";
    case SelectionMode::BaselineRandom: return "baseline-random";
    case SelectionMode::None: return "none";
    }
    return "none";
}

inline SelectionMode parse_mode(std::string_view name) {
    for (auto mode : {SelectionMode::TrainingRandom, SelectionMode::InferenceUniform, SelectionMode::BaselineRandom,
                      SelectionMode::None}) {
        if (mode_name(mode) == name) {
            return mode;
        }
    }
    throw Error(Errc::InvalidArgument, "unknown selection mode '" + std::string(name) + "'");
}

/// Which tokens survive. Kept positions are original flat row-major indices.
struct SelectionMask {
    std::size_t total = 0;
    std::vector<std::size_t> kept_positions;
    double ratio = 0.0;
    SelectionMode mode = SelectionMode::None;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const SelectionMask&, const SelectionMask&) = default;
};

/// Number of members kept from a component of `size` nodes at skip `ratio`.
/// Singletons are never touched; larger components keep at least one.
inline std::size_t kept_count(std::size_t size, double ratio) noexcept {
    if (size <= 1) {
        return size;
    }
    const auto rounded = std::llround((1.0 - ratio) * static_cast<double>(size));
    return std::clamp<std::size_t>(static_cast<std::size_t>(std::max<long long>(rounded, 1)), 1, size);
}

namespace detail {

inline void check_ratio(double ratio) {
    if (!(ratio >= 0.0 && ratio <= 1.0)) {
        throw Error(Errc::InvalidArgument, "ratio must lie in [0, 1]");
    }
}

}  // namespace detail

/// Random per-component skipping for training. Each component draws from its
/// own stream derived from (seed, component id), so the result does not depend
/// on visiting order.
inline SelectionMask select_training(const ComponentMap& map, double ratio, std::uint64_t seed) {
    detail::check_ratio(ratio);
    SelectionMask mask{map.total(), {}, ratio, SelectionMode::TrainingRandom, seed};
    auto members = map.members();
    for (std::size_t id = 0; id < members.size(); ++id) {
        auto& group = members[id];
        const std::size_t keep = kept_count(group.size(), ratio);
        if (keep < group.size()) {
            Xoshiro256 rng(derive_seed(seed, id));
            partial_shuffle(group, keep, rng);
        }
        mask.kept_positions.insert(mask.kept_positions.end(), group.begin(), group.begin() + keep);
    }
    std::sort(mask.kept_positions.begin(), mask.kept_positions.end());
    return mask;
}

/// Deterministic selection for inference: members at evenly spaced ranks
/// floor(i * m / keep), so rank 0 is always kept and no component vanishes.
inline SelectionMask select_inference(const ComponentMap& map, double ratio) {
    detail::check_ratio(ratio);
    SelectionMask mask{map.total(), {}, ratio, SelectionMode::InferenceUniform, std::nullopt};
    for (const auto& group : map.members()) {
        const std::size_t m = group.size();
        const std::size_t keep = kept_count(m, ratio);
        for (std::size_t i = 0; i < keep; ++i) {
            mask.kept_positions.push_back(group[i * m / keep]);
        }
    }
    std::sort(mask.kept_positions.begin(), mask.kept_positions.end());
    return mask;
}

/// Graph-agnostic baseline: keep max(1, round((1 - ratio) * total)) tokens
/// uniformly at random.
inline SelectionMask select_random_baseline(std::size_t total, double ratio, std::uint64_t seed) {
    detail::check_ratio(ratio);
    if (total == 0) {
        throw Error(Errc::InvalidArgument, "total must be >= 1");
    }
    const auto rounded = std::llround((1.0 - ratio) * static_cast<double>(total));
    const std::size_t keep = std::clamp<std::size_t>(static_cast<std::size_t>(std::max<long long>(rounded, 1)), 1, total);
    std::vector<std::size_t> all(total);
    std::iota(all.begin(), all.end(), std::size_t{0});
    Xoshiro256 rng(seed);
    partial_shuffle(all, keep, rng);
    all.resize(keep);
    std::sort(all.begin(), all.end());
    return SelectionMask{total, std::move(all), ratio, SelectionMode::BaselineRandom, seed};
}

/// Mask that keeps everything.
inline SelectionMask select_none(std::size_t total) {
    SelectionMask mask{total, std::vector<std::size_t>(total), 0.0, SelectionMode::None, std::nullopt};
    std::iota(mask.kept_positions.begin(), mask.kept_positions.end(), std::size_t{0});
    return mask;
}

/// Output of the merging baseline. Positions are gone by construction.
struct MergedTokens {
    std::vector<std::vector<double>> component_features;
    std::vector<std::size_t> origin_counts;
};

/// Mean-pools every component into one feature, in canonical id order.
inline MergedTokens merge_components(const ComponentMap& map, std::span<const std::vector<double>> features) {
    if (features.size() != map.total()) {
        throw Error(Errc::LengthMismatch, "feature count " + std::to_string(features.size()) + " != token count " +
                                              std::to_string(map.total()));
    }
    const std::size_t dim = features.empty() ? 0 : features.front().size();
    MergedTokens out;
    out.component_features.assign(map.k, std::vector<double>(dim, 0.0));
    out.origin_counts.assign(map.k, 0);
    for (std::size_t i = 0; i < features.size(); ++i) {
        if (features[i].size() != dim) {
            throw Error(Errc::LengthMismatch, "feature " + std::to_string(i) + " has a different dimension");
        }
        auto& acc = out.component_features[map.labels[i]];
        for (std::size_t d = 0; d < dim; ++d) {
            acc[d] += features[i][d];
        }
        ++out.origin_counts[map.labels[i]];
    }
    for (std::size_t id = 0; id < map.k; ++id) {
        for (double& v : out.component_features[id]) {
            v /= static_cast<double>(out.origin_counts[id]);
        }
    }
    return out;
}

/// A surviving token together with its original flat index.
template <typename T>
struct PositionedToken {
    std::size_t position;
    T value;

    friend bool operator==(const PositionedToken&, const PositionedToken&) = default;
};

/// Keeps the masked-in tokens in original order. Positions are copied from the
/// mask, never renumbered, so downstream position embeddings stay aligned.
template <typename T>
std::vector<PositionedToken<T>> apply_mask(const SelectionMask& mask, std::span<const T> tokens) {
    if (tokens.size() != mask.total) {
        throw Error(Errc::LengthMismatch, "token count " + std::to_string(tokens.size()) + " != mask total " +
                                              std::to_string(mask.total));
    }
    std::vector<PositionedToken<T>> out;
    out.reserve(mask.kept_positions.size());
    for (std::size_t pos : mask.kept_positions) {
        if (pos >= tokens.size()) {
            throw Error(Errc::InvalidArgument, "kept position " + std::to_string(pos) + " out of range");
        }
        out.push_back({pos, tokens[pos]});
    }
    return out;
}

template <typename T>
std::vector<PositionedToken<T>> apply_mask(const SelectionMask& mask, const std::vector<T>& tokens) {
    return apply_mask(mask, std::span<const T>(tokens));
}

}  // namespace uigraph
