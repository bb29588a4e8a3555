// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

// Builds the UI graph of a synthetic page and shows how many tokens each
// selection strategy keeps.

#include <cstdio>

#include "uigraph/uigraph.hpp"

int main() {
    using namespace uigraph;
    const Screenshot shot = synthetic_sparse_ui(1344, 756, 10, 42);
    const PatchGrid grid = build_grid(shot, 14, 2);
    const ComponentMap map = build_components(grid, kDefaultDelta);
    const GraphStats stats = component_stats(map);
    std::printf("%zu tokens -> %zu components (%zu singletons)\n", stats.token_count, stats.component_count,
                stats.singleton_count);
    for (double ratio : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto train = select_training(map, ratio, 0);
        const auto infer = select_inference(map, ratio);
        std::printf("ratio %.2f: training keeps %zu, inference keeps %zu\n", ratio, train.kept_positions.size(),
                    infer.kept_positions.size());
    }
    const auto sched = make_schedule(28, InsertionStrategy::Cross, 14);
    std::printf("cross schedule:");
    for (bool f : sched.flags) std::printf(" %d", f ? 1 : 0);
    std::printf("\n");
    return 0;
}
