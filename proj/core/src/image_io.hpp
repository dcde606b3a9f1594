// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uinr::detail {

// Row-major interleaved 8-bit pixels, channels 1 (gray) or 3 (RGB).
struct RawImage {
    std::int64_t height = 0;
    std::int64_t width = 0;
    int channels = 0;
    std::vector<std::uint8_t> pixels;
};

RawImage read_png(const std::string& path);
void write_png(const RawImage& img, const std::string& path);

}  // namespace uinr::detail
