// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "uigraph/error.hpp"

namespace uigraph {

enum class InsertionStrategy { All, Early, Late, Cross };

inline constexpr std::string_view strategy_name(InsertionStrategy s) noexcept {
    switch (s) {
    case InsertionStrategy::All: return "all";
    case InsertionStrategy::Early: return "early";
    case InsertionStrategy::Late: return "late";
    case InsertionStrategy::Cross: return "cross";
    }
    return "all";
}

inline InsertionStrategy parse_strategy(std::string_view name) {
    for (auto s : {InsertionStrategy::All, InsertionStrategy::Early, InsertionStrategy::Late, InsertionStrategy::Cross}) {
        if (strategy_name(s) == name) {
            return s;
        }
    }
    throw Error(Errc::InvalidArgument, "unknown insertion strategy '" + std::string(name) + "'");
}

/// Which layers run token selection. Consumers read `flags`; the schedule does
/// not care whether it governs the vision encoder or the language model.
struct LayerSchedule {
    std::size_t num_layers = 0;
    InsertionStrategy strategy = InsertionStrategy::All;
    std::size_t insert_count = 0;
    std::vector<bool> flags;
};

/// `All` ignores `insert_count` and selects every layer. `Cross` alternates
/// starting at layer 0, so it can place at most ceil(num_layers / 2) layers.
inline LayerSchedule make_schedule(std::size_t num_layers, InsertionStrategy strategy, std::size_t insert_count) {
    if (num_layers == 0) {
        throw Error(Errc::InvalidArgument, "num_layers must be >= 1");
    }
    if (strategy == InsertionStrategy::All) {
        insert_count = num_layers;
    }
    if (insert_count == 0 || insert_count > num_layers) {
        throw Error(Errc::CountExceedsLayers, "insert_count " + std::to_string(insert_count) + " not in [1, " +
                                                  std::to_string(num_layers) + "]");
    }
    LayerSchedule sched{num_layers, strategy, insert_count, std::vector<bool>(num_layers, false)};
    switch (strategy) {
    case InsertionStrategy::All:
        sched.flags.assign(num_layers, true);
        break;
    case InsertionStrategy::Early:
        for (std::size_t i = 0; i < insert_count; ++i) sched.flags[i] = true;
        break;
    case InsertionStrategy::Late:
        for (std::size_t i = num_layers - insert_count; i < num_layers; ++i) sched.flags[i] = true;
        break;
    case InsertionStrategy::Cross:
        if (insert_count > (num_layers + 1) / 2) {
            throw Error(Errc::CountExceedsLayers, "cross insertion fits at most " +
                                                      std::to_string((num_layers + 1) / 2) + " of " +
                                                      std::to_string(num_layers) + " layers");
        }
        for (std::size_t i = 0; i < insert_count; ++i) sched.flags[2 * i] = true;
        break;
    }
    return sched;
}

}  // namespace uigraph
