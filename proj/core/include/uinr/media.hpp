// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include "uinr/model.hpp"

#include <cstdint>
#include <string>

namespace uinr {

enum class Modality : std::uint8_t { Image = 0, Audio = 1, Video = 2 };

// Dimensions of one media item. Unused axes stay at their defaults so a shape
// is fully described by (modality, the axes that apply).
struct MediaShape {
    Modality modality = Modality::Image;
    std::int64_t frames = 1;    // video
    std::int64_t height = 1;    // image, video
    std::int64_t width = 1;     // image, video
    std::int64_t channels = 1;  // image, video: 1 or 3
    std::int64_t samples = 1;   // audio

    static MediaShape image(std::int64_t h, std::int64_t w, std::int64_t c);
    static MediaShape audio(std::int64_t t);
    static MediaShape video(std::int64_t f, std::int64_t h, std::int64_t w, std::int64_t c);

    int in_dim() const;   // 2 image, 1 audio, 3 video
    int out_dim() const;  // channels, or 1 for audio
    std::int64_t count() const;  // coordinate rows

    void validate() const;
    bool operator==(const MediaShape&) const = default;
};

// Media as a normalized coordinate/value dataset. Loaded media has every
// value in [-1, 1]; rendered media stores the raw network output, clamped
// only on save or metric de-normalization. sample_rate is carried for audio
// so a round trip preserves the header.
struct MediaTensor {
    MediaShape shape;
    Mat coords;  // count x in_dim
    Mat values;  // count x out_dim
    std::uint32_t sample_rate = 0;
};

// The exact coordinate enumeration load_* produces: image rows outer
// (y varies slowest), video frames outer, every axis mapped to [-1, 1] with
// endpoint inclusion and single-element axes pinned to -1.
Mat grid_for(const MediaShape& shape);

// 8-bit grayscale or RGB PNG. Pixel p maps to v = p/127.5 - 1; save inverts,
// clamps to [0, 255] and rounds half to even.
MediaTensor load_image(const std::string& path);
void save_image(const MediaTensor& tensor, const std::string& path);

// PCM16 mono WAV. Sample s maps to a = s/32767 clamped to [-1, 1]; save
// inverts with a symmetric clamp to [-32767, 32767].
MediaTensor load_audio(const std::string& path);
void save_audio(const MediaTensor& tensor, const std::string& path);

// Directory of equally sized PNG frames with zero-padded numeric names.
MediaTensor load_video(const std::string& frame_dir);
void save_video(const MediaTensor& tensor, const std::string& frame_dir);

// Builds a tensor from an existing value matrix (used by render/reveal).
MediaTensor media_from_values(const MediaShape& shape, Mat values,
                              std::uint32_t sample_rate = 0);

}  // namespace uinr
