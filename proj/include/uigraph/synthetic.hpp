// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>

#include "uigraph/patch_grid.hpp"
#include "uigraph/rng.hpp"

namespace uigraph {

/// A sparse "web page": flat background plus `widgets` small textured boxes
/// (buttons, icons) at random, non-overlapping-ish places. Handy for demos and
/// for checking that flat regions collapse into few components.
inline Screenshot synthetic_sparse_ui(std::size_t width, std::size_t height, std::size_t widgets, std::uint64_t seed) {
    Screenshot shot = solid_screenshot(width, height, {246, 247, 249}, "synthetic-sparse-ui");
    Xoshiro256 rng(seed);
    for (std::size_t w = 0; w < widgets; ++w) {
        const std::size_t bw = std::min<std::size_t>(width, 40 + rng.below(100));
        const std::size_t bh = std::min<std::size_t>(height, 24 + rng.below(40));
        const std::size_t x0 = rng.below(width - bw + 1);
        const std::size_t y0 = rng.below(height - bh + 1);
        const std::array<std::uint8_t, 3> base{static_cast<std::uint8_t>(rng.below(200)),
                                               static_cast<std::uint8_t>(rng.below(200)),
                                               static_cast<std::uint8_t>(rng.below(200))};
        for (std::size_t y = y0; y < y0 + bh; ++y) {
            for (std::size_t x = x0; x < x0 + bw; ++x) {
                // Glyph-like speckle so each widget patch is distinct.
                const std::uint8_t noise = static_cast<std::uint8_t>(rng.below(56));
                std::uint8_t* px = &shot.pixels[(y * width + x) * 3];
                px[0] = static_cast<std::uint8_t>(base[0] + noise);
                px[1] = static_cast<std::uint8_t>(base[1] + noise);
                px[2] = static_cast<std::uint8_t>(base[2] + noise);
            }
        }
    }
    return shot;
}

}  // namespace uigraph
