// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uigraph/error.hpp"

namespace uigraph {

using Rgb = std::array<double, 3>;

/// 8-bit RGB image, row-major, three bytes per pixel.
struct Screenshot {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;
    std::string source_id;

    void validate() const {
        if (width == 0 || height == 0) {
            throw Error(Errc::MalformedImage, "image has a zero dimension");
        }
        if (pixels.size() != width * height * 3) {
            throw Error(Errc::MalformedImage,
                        "pixel buffer holds " + std::to_string(pixels.size()) + " bytes, expected " +
                            std::to_string(width * height * 3));
        }
    }

    std::array<std::uint8_t, 3> at(std::size_t x, std::size_t y) const {
        const std::size_t i = (y * width + x) * 3;
        return {pixels[i], pixels[i + 1], pixels[i + 2]};
    }
};

/// Regular grid of patch nodes, each carrying the mean colour of its block.
struct PatchGrid {
    std::size_t grid_h = 0;
    std::size_t grid_w = 0;
    std::size_t patch_size = 0;  // effective edge: base patch times merge factor
    std::vector<Rgb> nodes;      // row-major, grid_h * grid_w
    std::string source_id;

    std::size_t size() const noexcept { return grid_h * grid_w; }
    const Rgb& at(std::size_t row, std::size_t col) const { return nodes[row * grid_w + col]; }
};

inline std::size_t token_count(const PatchGrid& grid) noexcept { return grid.grid_h * grid.grid_w; }

struct GridShape {
    std::size_t grid_h;
    std::size_t grid_w;
    std::size_t patch_size;

    std::size_t tokens() const noexcept { return grid_h * grid_w; }
};

/// Grid dimensions for an H x W image without touching pixels.
inline GridShape grid_shape(std::size_t height, std::size_t width, std::size_t base_patch, std::size_t merge_factor) {
    if (base_patch == 0 || merge_factor == 0) {
        throw Error(Errc::InvalidArgument, "patch size and merge factor must be >= 1");
    }
    const std::size_t c = base_patch * merge_factor;
    if (c > height || c > width) {
        throw Error(Errc::ZeroDimension, "effective patch " + std::to_string(c) + " exceeds image " +
                                             std::to_string(width) + "x" + std::to_string(height));
    }
    return {height / c, width / c, c};
}

/// Splits the image into floor(H/c) x floor(W/c) patches with c = base_patch *
/// merge_factor. Pixels past the last full patch row or column are dropped.
inline PatchGrid build_grid(const Screenshot& shot, std::size_t base_patch, std::size_t merge_factor) {
    shot.validate();
    const GridShape shape = grid_shape(shot.height, shot.width, base_patch, merge_factor);
    const std::size_t c = shape.patch_size;

    PatchGrid grid;
    grid.grid_h = shape.grid_h;
    grid.grid_w = shape.grid_w;
    grid.patch_size = c;
    grid.source_id = shot.source_id;
    grid.nodes.resize(grid.grid_h * grid.grid_w);

    // Integer sums keep the mean exact up to the final division.
    std::vector<std::array<std::uint64_t, 3>> sums(grid.grid_w);
    const double area = static_cast<double>(c * c);
    for (std::size_t gr = 0; gr < grid.grid_h; ++gr) {
        sums.assign(grid.grid_w, {0, 0, 0});
        for (std::size_t y = gr * c; y < (gr + 1) * c; ++y) {
            const std::uint8_t* row = shot.pixels.data() + y * shot.width * 3;
            for (std::size_t gc = 0; gc < grid.grid_w; ++gc) {
                auto& acc = sums[gc];
                const std::uint8_t* px = row + gc * c * 3;
                for (std::size_t x = 0; x < c; ++x, px += 3) {
                    acc[0] += px[0];
                    acc[1] += px[1];
                    acc[2] += px[2];
                }
            }
        }
        for (std::size_t gc = 0; gc < grid.grid_w; ++gc) {
            auto& node = grid.nodes[gr * grid.grid_w + gc];
            for (int ch = 0; ch < 3; ++ch) {
                node[ch] = static_cast<double>(sums[gc][ch]) / area;
            }
        }
    }
    return grid;
}

/// Convenience for tests and generators: a width x height image of one colour.
inline Screenshot solid_screenshot(std::size_t width, std::size_t height, std::array<std::uint8_t, 3> color,
                                   std::string source_id = {}) {
    Screenshot shot{width, height, {}, std::move(source_id)};
    shot.pixels.resize(width * height * 3);
    for (std::size_t i = 0; i < width * height; ++i) {
        shot.pixels[i * 3] = color[0];
        shot.pixels[i * 3 + 1] = color[1];
        shot.pixels[i * 3 + 2] = color[2];
    }
    return shot;
}

}  // namespace uigraph
