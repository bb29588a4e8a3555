// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uigraph {

enum class Errc {
    ZeroDimension,
    MalformedImage,
    LengthMismatch,
    CountExceedsLayers,
    InvalidEpisode,
    InvalidAction,
    ParseError,
    SpaceMismatch,
    InvalidArgument,
    IoError,
    UsageError,
};

inline constexpr std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::ZeroDimension: return "ZeroDimension";
    case Errc::MalformedImage: return "MalformedImage";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::CountExceedsLayers: return "CountExceedsLayers";
    case Errc::InvalidEpisode: return "InvalidEpisode";
    case Errc::InvalidAction: return "InvalidAction";
    case Errc::ParseError: return "ParseError";
    case Errc::SpaceMismatch: return "SpaceMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
    case Errc::UsageError: return "UsageError";
    }
    return "Unknown";
}

/// Every failure raised by the library. `what()` is prefixed with the code name
/// so a one-line diagnostic is self-describing.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, std::size_t offset = 0)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          m_code(code),
          m_offset(offset) {}

    Errc code() const noexcept { return m_code; }
    std::string_view name() const noexcept { return errc_name(m_code); }

    /// Byte offset into the input for ParseError, 0 otherwise.
    std::size_t offset() const noexcept { return m_offset; }

private:
    Errc m_code;
    std::size_t m_offset;
};

}  // namespace uigraph
