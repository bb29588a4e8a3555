// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <png.h>

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "uigraph/error.hpp"
#include "uigraph/patch_grid.hpp"

namespace uigraph {

/// Decodes a PNG into 8-bit RGB. Any alpha channel is discarded, not composited.
inline Screenshot load_png(const std::filesystem::path& path) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&image, path.string().c_str())) {
        const std::string msg = image.message;
        png_image_free(&image);
        throw Error(Errc::MalformedImage, path.string() + ": " + msg);
    }
    image.format = PNG_FORMAT_RGBA;
    std::vector<std::uint8_t> rgba(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, rgba.data(), 0, nullptr)) {
        const std::string msg = image.message;
        png_image_free(&image);
        throw Error(Errc::MalformedImage, path.string() + ": " + msg);
    }

    Screenshot shot;
    shot.width = image.width;
    shot.height = image.height;
    shot.source_id = path.filename().string();
    shot.pixels.resize(shot.width * shot.height * 3);
    for (std::size_t i = 0; i < shot.width * shot.height; ++i) {
        std::memcpy(&shot.pixels[i * 3], &rgba[i * 4], 3);
    }
    shot.validate();
    return shot;
}

/// Reads a headerless width x height x 3 byte buffer.
inline Screenshot load_raw_rgb(const std::filesystem::path& path, std::size_t width, std::size_t height) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::IoError, "cannot open " + path.string());
    }
    Screenshot shot;
    shot.width = width;
    shot.height = height;
    shot.source_id = path.filename().string();
    shot.pixels.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    shot.validate();
    return shot;
}

inline void save_png(const std::filesystem::path& path, std::size_t width, std::size_t height,
                     std::span<const std::uint8_t> rgb) {
    if (rgb.size() != width * height * 3) {
        throw Error(Errc::MalformedImage, "pixel buffer does not match " + std::to_string(width) + "x" +
                                              std::to_string(height));
    }
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(width);
    image.height = static_cast<png_uint_32>(height);
    image.format = PNG_FORMAT_RGB;
    if (!png_image_write_to_file(&image, path.string().c_str(), 0, rgb.data(), 0, nullptr)) {
        const std::string msg = image.message;
        png_image_free(&image);
        throw Error(Errc::IoError, path.string() + ": " + msg);
    }
}

inline void save_png(const std::filesystem::path& path, const Screenshot& shot) {
    save_png(path, shot.width, shot.height, shot.pixels);
}

}  // namespace uigraph
