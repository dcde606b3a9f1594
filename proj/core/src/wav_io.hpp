// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uinr::detail {

struct RawAudio {
    std::uint32_t sample_rate = 0;
    std::vector<std::int16_t> samples;
};

// Minimal RIFF/WAVE codec restricted to PCM16 mono.
RawAudio read_wav(const std::string& path);
void write_wav(const RawAudio& audio, const std::string& path);

}  // namespace uinr::detail
