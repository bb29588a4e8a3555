// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Test-only oracles and generators. Nothing here calls into the union-find or
// selection code it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <vector>

#include "uigraph/patch_grid.hpp"

namespace uigraph::testing {

/// Random grid whose channels come from `palette`; a small palette makes
/// plenty of equal neighbours.
inline PatchGrid random_grid(std::mt19937_64& gen, std::size_t h, std::size_t w, const std::vector<double>& palette) {
    PatchGrid g;
    g.grid_h = h;
    g.grid_w = w;
    g.patch_size = 1;
    g.nodes.resize(h * w);
    std::uniform_int_distribution<std::size_t> pick(0, palette.size() - 1);
    for (auto& n : g.nodes) n = {palette[pick(gen)], palette[pick(gen)], palette[pick(gen)]};
    return g;
}

/// Grid with continuous-valued channels perturbed around a few base colours,
/// so distances spread across every threshold of interest.
inline PatchGrid noisy_grid(std::mt19937_64& gen, std::size_t h, std::size_t w) {
    PatchGrid g;
    g.grid_h = h;
    g.grid_w = w;
    g.patch_size = 1;
    g.nodes.resize(h * w);
    std::uniform_int_distribution<int> base(0, 3);
    std::uniform_real_distribution<double> jitter(-20.0, 20.0);
    for (auto& n : g.nodes) {
        const double b = 60.0 * base(gen);
        for (double& ch : n) ch = std::clamp(b + jitter(gen), 0.0, 255.0);
    }
    return g;
}

inline bool edge(const Rgb& a, const Rgb& b, double delta) {
    double s = 0;
    for (int c = 0; c < 3; ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
    return std::sqrt(s) < delta;
}

/// Breadth-first flood fill with the same 4-neighbour edge rule. Labels are
/// assigned in order of the seed pixel's row-major position.
inline std::vector<std::size_t> bfs_labels(const PatchGrid& g, double delta) {
    const std::size_t h = g.grid_h, w = g.grid_w;
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(h * w, kUnset);
    std::size_t next = 0;
    for (std::size_t start = 0; start < h * w; ++start) {
        if (label[start] != kUnset) continue;
        std::queue<std::size_t> q;
        q.push(start);
        label[start] = next;
        while (!q.empty()) {
            const std::size_t cur = q.front();
            q.pop();
            const std::size_t r = cur / w, c = cur % w;
            const std::size_t nbrs[4] = {r > 0 ? cur - w : kUnset, r + 1 < h ? cur + w : kUnset,
                                         c > 0 ? cur - 1 : kUnset, c + 1 < w ? cur + 1 : kUnset};
            for (std::size_t nb : nbrs) {
                if (nb != kUnset && label[nb] == kUnset && edge(g.nodes[cur], g.nodes[nb], delta)) {
                    label[nb] = next;
                    q.push(nb);
                }
            }
        }
        ++next;
    }
    return label;
}

/// True when both labelings induce the same partition.
inline bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) return false;
    std::map<std::size_t, std::size_t> ab, ba;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [it1, ins1] = ab.try_emplace(a[i], b[i]);
        auto [it2, ins2] = ba.try_emplace(b[i], a[i]);
        if (it1->second != b[i] || it2->second != a[i]) return false;
    }
    return true;
}

/// True when every block of `fine` lies inside one block of `coarse`.
inline bool refines(const std::vector<std::size_t>& fine, const std::vector<std::size_t>& coarse) {
    std::map<std::size_t, std::size_t> owner;
    for (std::size_t i = 0; i < fine.size(); ++i) {
        auto [it, ins] = owner.try_emplace(fine[i], coarse[i]);
        if (it->second != coarse[i]) return false;
    }
    return true;
}

}  // namespace uigraph::testing
