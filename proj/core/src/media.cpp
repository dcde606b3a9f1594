// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "uinr/media.hpp"

#include "image_io.hpp"
#include "wav_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <vector>

namespace uinr {

namespace fs = std::filesystem;

MediaShape MediaShape::image(std::int64_t h, std::int64_t w, std::int64_t c) {
    MediaShape s;
    s.modality = Modality::Image;
    s.height = h;
    s.width = w;
    s.channels = c;
    s.validate();
    return s;
}

MediaShape MediaShape::audio(std::int64_t t) {
    MediaShape s;
    s.modality = Modality::Audio;
    s.samples = t;
    s.validate();
    return s;
}

MediaShape MediaShape::video(std::int64_t f, std::int64_t h, std::int64_t w, std::int64_t c) {
    MediaShape s;
    s.modality = Modality::Video;
    s.frames = f;
    s.height = h;
    s.width = w;
    s.channels = c;
    s.validate();
    return s;
}

int MediaShape::in_dim() const {
    switch (modality) {
        case Modality::Image: return 2;
        case Modality::Audio: return 1;
        case Modality::Video: return 3;
    }
    return 0;
}

int MediaShape::out_dim() const {
    return modality == Modality::Audio ? 1 : static_cast<int>(channels);
}

std::int64_t MediaShape::count() const {
    switch (modality) {
        case Modality::Image: return height * width;
        case Modality::Audio: return samples;
        case Modality::Video: return frames * height * width;
    }
    return 0;
}

void MediaShape::validate() const {
    const bool pixelish = modality == Modality::Image || modality == Modality::Video;
    if (pixelish) {
        if (height < 1 || width < 1) throw std::invalid_argument("media shape: zero dims");
        if (channels != 1 && channels != 3)
            throw std::invalid_argument("media shape: channels must be 1 or 3");
    }
    if (modality == Modality::Video && frames < 1)
        throw std::invalid_argument("media shape: zero frames");
    if (modality == Modality::Audio && samples < 1)
        throw std::invalid_argument("media shape: zero samples");
}

namespace {

// Index i of an n-long axis to [-1, 1]; a single-element axis pins to -1.
double axis_coord(std::int64_t i, std::int64_t n) {
    if (n == 1) return -1.0;
    return 2.0 * static_cast<double>(i) / static_cast<double>(n - 1) - 1.0;
}

double pixel_to_value(std::uint8_t p) { return static_cast<double>(p) / 127.5 - 1.0; }

std::uint8_t value_to_pixel(double v) {
    const double q = std::nearbyint((v + 1.0) * 127.5);
    return static_cast<std::uint8_t>(std::clamp(q, 0.0, 255.0));
}

Mat values_from_pixels(const detail::RawImage& img) {
    Mat values(img.height * img.width, img.channels);
    const std::uint8_t* p = img.pixels.data();
    for (Eigen::Index i = 0; i < values.size(); ++i) values.data()[i] = pixel_to_value(p[i]);
    return values;
}

detail::RawImage pixels_from_values(const Mat& values, std::int64_t h, std::int64_t w,
                                    std::int64_t c) {
    detail::RawImage img;
    img.height = h;
    img.width = w;
    img.channels = static_cast<int>(c);
    img.pixels.resize(static_cast<std::size_t>(values.size()));
    for (Eigen::Index i = 0; i < values.size(); ++i)
        img.pixels[static_cast<std::size_t>(i)] = value_to_pixel(values.data()[i]);
    return img;
}

std::vector<fs::path> list_frames(const std::string& dir) {
    if (!fs::is_directory(dir)) throw std::runtime_error(dir + ": not a directory");
    std::vector<fs::path> frames;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".png") frames.push_back(e.path());
    std::sort(frames.begin(), frames.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
    if (frames.empty()) throw std::runtime_error(dir + ": no PNG frames");
    return frames;
}

}  // namespace

Mat grid_for(const MediaShape& shape) {
    shape.validate();
    Mat coords(shape.count(), shape.in_dim());
    switch (shape.modality) {
        case Modality::Image: {
            Eigen::Index row = 0;
            for (std::int64_t r = 0; r < shape.height; ++r) {
                const double y = axis_coord(r, shape.height);
                for (std::int64_t c = 0; c < shape.width; ++c, ++row) {
                    coords(row, 0) = axis_coord(c, shape.width);
                    coords(row, 1) = y;
                }
            }
            break;
        }
        case Modality::Audio: {
            for (std::int64_t i = 0; i < shape.samples; ++i)
                coords(i, 0) = axis_coord(i, shape.samples);
            break;
        }
        case Modality::Video: {
            Eigen::Index row = 0;
            for (std::int64_t f = 0; f < shape.frames; ++f) {
                const double t = axis_coord(f, shape.frames);
                for (std::int64_t r = 0; r < shape.height; ++r) {
                    const double y = axis_coord(r, shape.height);
                    for (std::int64_t c = 0; c < shape.width; ++c, ++row) {
                        coords(row, 0) = axis_coord(c, shape.width);
                        coords(row, 1) = y;
                        coords(row, 2) = t;
                    }
                }
            }
            break;
        }
    }
    return coords;
}

MediaTensor load_image(const std::string& path) {
    detail::RawImage img = detail::read_png(path);
    MediaTensor t;
    t.shape = MediaShape::image(img.height, img.width, img.channels);
    t.coords = grid_for(t.shape);
    t.values = values_from_pixels(img);
    return t;
}

void save_image(const MediaTensor& tensor, const std::string& path) {
    if (tensor.shape.modality != Modality::Image)
        throw std::invalid_argument("save_image: not an image tensor");
    detail::write_png(
        pixels_from_values(tensor.values, tensor.shape.height, tensor.shape.width,
                           tensor.shape.channels),
        path);
}

MediaTensor load_audio(const std::string& path) {
    detail::RawAudio audio = detail::read_wav(path);
    if (audio.samples.empty()) throw std::runtime_error(path + ": empty data chunk");
    MediaTensor t;
    t.shape = MediaShape::audio(static_cast<std::int64_t>(audio.samples.size()));
    t.coords = grid_for(t.shape);
    t.values.resize(t.shape.samples, 1);
    for (std::int64_t i = 0; i < t.shape.samples; ++i) {
        const double a = static_cast<double>(audio.samples[static_cast<std::size_t>(i)]) / 32767.0;
        t.values(i, 0) = std::clamp(a, -1.0, 1.0);
    }
    t.sample_rate = audio.sample_rate;
    return t;
}

void save_audio(const MediaTensor& tensor, const std::string& path) {
    if (tensor.shape.modality != Modality::Audio)
        throw std::invalid_argument("save_audio: not an audio tensor");
    detail::RawAudio audio;
    audio.sample_rate = tensor.sample_rate != 0 ? tensor.sample_rate : 8000;
    audio.samples.resize(static_cast<std::size_t>(tensor.shape.samples));
    for (std::int64_t i = 0; i < tensor.shape.samples; ++i) {
        const double s = std::nearbyint(tensor.values(i, 0) * 32767.0);
        audio.samples[static_cast<std::size_t>(i)] =
            static_cast<std::int16_t>(std::clamp(s, -32767.0, 32767.0));
    }
    detail::write_wav(audio, path);
}

MediaTensor load_video(const std::string& frame_dir) {
    const auto frames = list_frames(frame_dir);
    MediaTensor t;
    Eigen::Index row = 0;
    for (std::size_t f = 0; f < frames.size(); ++f) {
        detail::RawImage img = detail::read_png(frames[f].string());
        if (f == 0) {
            t.shape = MediaShape::video(static_cast<std::int64_t>(frames.size()), img.height,
                                        img.width, img.channels);
            t.coords = grid_for(t.shape);
            t.values.resize(t.shape.count(), t.shape.out_dim());
        } else if (img.height != t.shape.height || img.width != t.shape.width ||
                   img.channels != t.shape.channels) {
            throw std::runtime_error(frames[f].string() + ": frame size mismatch");
        }
        const Mat v = values_from_pixels(img);
        t.values.middleRows(row, v.rows()) = v;
        row += v.rows();
    }
    return t;
}

void save_video(const MediaTensor& tensor, const std::string& frame_dir) {
    if (tensor.shape.modality != Modality::Video)
        throw std::invalid_argument("save_video: not a video tensor");
    fs::create_directories(frame_dir);
    const std::int64_t per = tensor.shape.height * tensor.shape.width;
    for (std::int64_t f = 0; f < tensor.shape.frames; ++f) {
        char name[32];
        std::snprintf(name, sizeof(name), "%06lld.png", static_cast<long long>(f));
        const Mat v = tensor.values.middleRows(f * per, per);
        detail::write_png(
            pixels_from_values(v, tensor.shape.height, tensor.shape.width, tensor.shape.channels),
            (fs::path(frame_dir) / name).string());
    }
}

MediaTensor media_from_values(const MediaShape& shape, Mat values, std::uint32_t sample_rate) {
    shape.validate();
    if (values.rows() != shape.count() || values.cols() != shape.out_dim())
        throw std::invalid_argument("media_from_values: value matrix does not match shape");
    MediaTensor t;
    t.shape = shape;
    t.coords = grid_for(shape);
    t.values = std::move(values);
    t.sample_rate = sample_rate;
    return t;
}

}  // namespace uinr
