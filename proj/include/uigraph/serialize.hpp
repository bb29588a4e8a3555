// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// JSON forms of the toolkit's artifacts. Every document carries
// "schema_version"; the schemas live in docs/schemas/.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "uigraph/error.hpp"
#include "uigraph/layer_policy.hpp"
#include "uigraph/patch_grid.hpp"
#include "uigraph/sampler.hpp"
#include "uigraph/token_select.hpp"
#include "uigraph/ui_graph.hpp"

namespace uigraph {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;

inline json grid_to_json(const PatchGrid& grid) {
    json reps = json::array();
    for (const auto& n : grid.nodes) reps.push_back({n[0], n[1], n[2]});
    return {{"schema_version", kSchemaVersion},
            {"grid_h", grid.grid_h},
            {"grid_w", grid.grid_w},
            {"patch_size", grid.patch_size},
            {"source", grid.source_id},
            {"representatives", std::move(reps)}};
}

inline PatchGrid grid_from_json(const json& j) {
    PatchGrid grid;
    grid.grid_h = j.at("grid_h").get<std::size_t>();
    grid.grid_w = j.at("grid_w").get<std::size_t>();
    grid.patch_size = j.at("patch_size").get<std::size_t>();
    grid.source_id = j.value("source", std::string{});
    for (const auto& r : j.at("representatives")) {
        grid.nodes.push_back({r.at(0).get<double>(), r.at(1).get<double>(), r.at(2).get<double>()});
    }
    if (grid.nodes.size() != grid.grid_h * grid.grid_w || grid.nodes.empty()) {
        throw Error(Errc::LengthMismatch, "representative count does not match grid dimensions");
    }
    return grid;
}

inline json component_map_to_json(const ComponentMap& map) {
    return {{"schema_version", kSchemaVersion},
            {"grid_h", map.grid_h},
            {"grid_w", map.grid_w},
            {"delta", map.delta},
            {"metric", map.metric},
            {"k", map.k},
            {"labels", map.labels}};
}

/// Reads a map back and checks every ComponentMap invariant except
/// connectivity, which needs the grid.
inline ComponentMap component_map_from_json(const json& j) {
    ComponentMap map;
    try {
        map.grid_h = j.at("grid_h").get<std::size_t>();
        map.grid_w = j.at("grid_w").get<std::size_t>();
        map.delta = j.at("delta").get<double>();
        map.metric = j.value("metric", std::string(kMetricL2MeanRgb));
        map.k = j.at("k").get<std::size_t>();
        map.labels = j.at("labels").get<std::vector<std::size_t>>();
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("component map: ") + e.what());
    }
    map.component_sizes.assign(map.k, 0);
    for (std::size_t label : map.labels) {
        if (label >= map.k) {
            throw Error(Errc::InvalidArgument, "label " + std::to_string(label) + " >= k");
        }
        ++map.component_sizes[label];
    }
    map.validate();
    return map;
}

inline json stats_to_json(const GraphStats& stats) {
    json hist = json::array();
    for (const auto& [size, count] : stats.size_histogram) hist.push_back({{"size", size}, {"count", count}});
    return {{"schema_version", kSchemaVersion},
            {"token_count", stats.token_count},
            {"k", stats.component_count},
            {"reduction_ratio", stats.reduction_ratio},
            {"singleton_count", stats.singleton_count},
            {"size_histogram", std::move(hist)}};
}

inline json mask_to_json(const SelectionMask& mask) {
    return {{"schema_version", kSchemaVersion},
            {"total", mask.total},
            {"ratio", mask.ratio},
            {"mode", mode_name(mask.mode)},
            {"seed", mask.seed ? json(*mask.seed) : json(nullptr)},
            {"kept_positions", mask.kept_positions}};
}

inline SelectionMask mask_from_json(const json& j) {
    SelectionMask mask;
    mask.total = j.at("total").get<std::size_t>();
    mask.ratio = j.at("ratio").get<double>();
    mask.mode = parse_mode(j.at("mode").get<std::string>());
    if (!j.at("seed").is_null()) mask.seed = j.at("seed").get<std::uint64_t>();
    mask.kept_positions = j.at("kept_positions").get<std::vector<std::size_t>>();
    for (std::size_t i = 0; i < mask.kept_positions.size(); ++i) {
        if (mask.kept_positions[i] >= mask.total || (i > 0 && mask.kept_positions[i] <= mask.kept_positions[i - 1])) {
            throw Error(Errc::InvalidArgument, "kept_positions must be strictly increasing and < total");
        }
    }
    return mask;
}

inline json schedule_to_json(const LayerSchedule& s) {
    return {{"schema_version", kSchemaVersion},
            {"num_layers", s.num_layers},
            {"strategy", strategy_name(s.strategy)},
            {"insert_count", s.insert_count},
            {"flags", s.flags}};
}

/// One JSONL line per draw.
inline std::string plan_to_jsonl(const SamplePlan& plan) {
    std::string out;
    for (const auto& d : plan.draws) {
        out += json{{"schema_version", kSchemaVersion}, {"dataset", plan.datasets[d.dataset]}, {"index", d.index}}.dump();
        out += '\n';
    }
    return out;
}

}  // namespace uigraph
