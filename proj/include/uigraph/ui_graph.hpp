// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uigraph/error.hpp"
#include "uigraph/patch_grid.hpp"
#include "uigraph/rng.hpp"

namespace uigraph {

inline constexpr double kDefaultDelta = 1.0;
inline constexpr const char* kMetricL2MeanRgb = "l2-mean-rgb";

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : m_parent(n), m_size(n, 1) {
        std::iota(m_parent.begin(), m_parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) noexcept {
        while (m_parent[x] != x) {
            m_parent[x] = m_parent[m_parent[x]];
            x = m_parent[x];
        }
        return x;
    }

    /// Returns false when a and b were already joined.
    bool unite(std::size_t a, std::size_t b) noexcept {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (m_size[a] < m_size[b]) {
            std::swap(a, b);
        }
        m_parent[b] = a;
        m_size[a] += m_size[b];
        return true;
    }

    std::size_t size() const noexcept { return m_parent.size(); }

private:
    std::vector<std::size_t> m_parent;
    std::vector<std::size_t> m_size;
};

/// Patch-to-component assignment. Labels are canonical: component ids are
/// handed out in order of first appearance in a row-major scan.
struct ComponentMap {
    std::size_t grid_h = 0;
    std::size_t grid_w = 0;
    std::vector<std::size_t> labels;
    std::vector<std::size_t> component_sizes;
    std::size_t k = 0;
    double delta = kDefaultDelta;
    std::string metric = kMetricL2MeanRgb;

    std::size_t total() const noexcept { return grid_h * grid_w; }

    /// Member flat indices per component, each list ascending.
    std::vector<std::vector<std::size_t>> members() const {
        std::vector<std::vector<std::size_t>> out(k);
        for (std::size_t i = 0; i < k; ++i) {
            out[i].reserve(component_sizes[i]);
        }
        for (std::size_t idx = 0; idx < labels.size(); ++idx) {
            out[labels[idx]].push_back(idx);
        }
        return out;
    }

    /// Checks the structural invariants; throws InvalidArgument on violation.
    /// Used when a map is read back from disk.
    void validate() const {
        if (grid_h == 0 || grid_w == 0) {
            throw Error(Errc::InvalidArgument, "component map has an empty grid");
        }
        if (labels.size() != total()) {
            throw Error(Errc::LengthMismatch, "label count " + std::to_string(labels.size()) +
                                                  " != grid size " + std::to_string(total()));
        }
        if (k == 0 || k > total() || component_sizes.size() != k) {
            throw Error(Errc::InvalidArgument, "component count out of range");
        }
        std::size_t next = 0;
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t label : labels) {
            if (label >= k || label > next) {
                throw Error(Errc::InvalidArgument, "labels are not canonical first-appearance ids");
            }
            if (label == next) {
                ++next;
            }
            ++counts[label];
        }
        if (next != k || counts != component_sizes) {
            throw Error(Errc::InvalidArgument, "labels do not cover [0, k) with the stated sizes");
        }
    }
};

/// Rebuilds a map from arbitrary labels (any ids, one per node), canonicalizing
/// them and recomputing sizes.
inline ComponentMap canonicalize(std::size_t grid_h, std::size_t grid_w, std::span<const std::size_t> raw_labels,
                                 double delta = kDefaultDelta, std::string metric = kMetricL2MeanRgb) {
    if (raw_labels.size() != grid_h * grid_w) {
        throw Error(Errc::LengthMismatch, "label count does not match grid");
    }
    ComponentMap map;
    map.grid_h = grid_h;
    map.grid_w = grid_w;
    map.delta = delta;
    map.metric = std::move(metric);
    map.labels.resize(raw_labels.size());
    std::map<std::size_t, std::size_t> remap;
    for (std::size_t i = 0; i < raw_labels.size(); ++i) {
        auto [it, inserted] = remap.try_emplace(raw_labels[i], map.k);
        if (inserted) {
            ++map.k;
            map.component_sizes.push_back(0);
        }
        map.labels[i] = it->second;
        ++map.component_sizes[it->second];
    }
    return map;
}

inline double rgb_distance(const Rgb& a, const Rgb& b) noexcept {
    const double dr = a[0] - b[0];
    const double dg = a[1] - b[1];
    const double db = a[2] - b[2];
    return std::sqrt(dr * dr + dg * dg + db * db);
}

/// Joins every pair of 4-neighbours whose representatives are strictly closer
/// than `delta` and returns the resulting connected components.
inline ComponentMap build_components(const PatchGrid& grid, double delta = kDefaultDelta) {
    if (!(delta >= 0.0)) {
        throw Error(Errc::InvalidArgument, "delta must be >= 0");
    }
    if (grid.nodes.size() != grid.grid_h * grid.grid_w || grid.nodes.empty()) {
        throw Error(Errc::LengthMismatch, "grid node count does not match its dimensions");
    }
    const std::size_t h = grid.grid_h;
    const std::size_t w = grid.grid_w;
    UnionFind uf(h * w);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) {
            const std::size_t idx = r * w + c;
            if (c + 1 < w && rgb_distance(grid.nodes[idx], grid.nodes[idx + 1]) < delta) {
                uf.unite(idx, idx + 1);
            }
            if (r + 1 < h && rgb_distance(grid.nodes[idx], grid.nodes[idx + w]) < delta) {
                uf.unite(idx, idx + w);
            }
        }
    }

    ComponentMap map;
    map.grid_h = h;
    map.grid_w = w;
    map.delta = delta;
    map.labels.resize(h * w);
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> root_label(h * w, kUnset);
    for (std::size_t idx = 0; idx < h * w; ++idx) {
        const std::size_t root = uf.find(idx);
        if (root_label[root] == kUnset) {
            root_label[root] = map.k++;
            map.component_sizes.push_back(0);
        }
        map.labels[idx] = root_label[root];
        ++map.component_sizes[root_label[root]];
    }
    return map;
}

struct GraphStats {
    std::size_t token_count = 0;
    std::size_t component_count = 0;
    double reduction_ratio = 1.0;  // K / token_count
    std::map<std::size_t, std::size_t> size_histogram;
    std::size_t singleton_count = 0;
};

inline GraphStats component_stats(const ComponentMap& map) {
    GraphStats stats;
    stats.token_count = map.labels.size();
    stats.component_count = map.k;
    stats.reduction_ratio =
        stats.token_count == 0 ? 1.0 : static_cast<double>(map.k) / static_cast<double>(stats.token_count);
    std::vector<std::size_t> sizes(map.k, 0);
    for (std::size_t label : map.labels) {
        ++sizes[label];
    }
    for (std::size_t s : sizes) {
        ++stats.size_histogram[s];
    }
    auto it = stats.size_histogram.find(1);
    stats.singleton_count = it == stats.size_histogram.end() ? 0 : it->second;
    return stats;
}

/// Stable colour for a component id: hashed hue, fixed saturation/value bands.
inline std::array<std::uint8_t, 3> component_color(std::size_t id) noexcept {
    std::uint64_t s = static_cast<std::uint64_t>(id);
    const std::uint64_t hash = splitmix64(s);
    const double hue = static_cast<double>(hash % 3600) / 10.0;
    const double sat = 0.55 + 0.4 * static_cast<double>((hash >> 16) % 100) / 99.0;
    const double val = 0.65 + 0.35 * static_cast<double>((hash >> 32) % 100) / 99.0;

    const double chroma = val * sat;
    const double hp = hue / 60.0;
    const double x = chroma * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(hp) % 6) {
    case 0: r = chroma, g = x; break;
    case 1: r = x, g = chroma; break;
    case 2: g = chroma, b = x; break;
    case 3: g = x, b = chroma; break;
    case 4: r = x, b = chroma; break;
    default: r = chroma, b = x; break;
    }
    const double m = val - chroma;
    auto to_byte = [m](double v) { return static_cast<std::uint8_t>(std::lround((v + m) * 255.0)); };
    return {to_byte(r), to_byte(g), to_byte(b)};
}

/// Paints each component in its hashed colour at `patch_size` pixels per node.
inline Screenshot render_overlay(const ComponentMap& map, std::size_t patch_size) {
    if (patch_size == 0) {
        throw Error(Errc::InvalidArgument, "overlay patch size must be >= 1");
    }
    Screenshot out;
    out.width = map.grid_w * patch_size;
    out.height = map.grid_h * patch_size;
    out.pixels.resize(out.width * out.height * 3);
    for (std::size_t y = 0; y < out.height; ++y) {
        for (std::size_t x = 0; x < out.width; ++x) {
            const auto color = component_color(map.labels[(y / patch_size) * map.grid_w + x / patch_size]);
            std::uint8_t* px = &out.pixels[(y * out.width + x) * 3];
            px[0] = color[0];
            px[1] = color[1];
            px[2] = color[2];
        }
    }
    return out;
}

}  // namespace uigraph
