// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "wav_io.hpp"

#include <cstddef>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace uinr::detail {

namespace {

[[noreturn]] void fail(const std::string& path, const char* what) {
    throw std::runtime_error(path + ": " + what);
}

std::uint16_t rd_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t rd_u32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void wr_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void wr_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void wr_tag(std::vector<std::uint8_t>& out, const char* tag) {
    out.insert(out.end(), tag, tag + 4);
}

}  // namespace

RawAudio read_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
    if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
        std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
        fail(path, "not a RIFF/WAVE file");

    bool have_fmt = false;
    RawAudio audio;
    std::size_t pos = 12;
    const std::uint8_t* data_ptr = nullptr;
    std::uint32_t data_len = 0;

    while (pos + 8 <= buf.size()) {
        const std::uint8_t* hdr = buf.data() + pos;
        const std::uint32_t len = rd_u32(hdr + 4);
        pos += 8;
        if (pos + len > buf.size()) fail(path, "truncated chunk");
        if (std::memcmp(hdr, "fmt ", 4) == 0) {
            if (len < 16) fail(path, "fmt chunk too short");
            const std::uint16_t format = rd_u16(buf.data() + pos);
            const std::uint16_t channels = rd_u16(buf.data() + pos + 2);
            const std::uint16_t bits = rd_u16(buf.data() + pos + 14);
            if (format != 1) fail(path, "only PCM WAV is supported");
            if (channels != 1) fail(path, "only mono WAV is supported");
            if (bits != 16) fail(path, "only 16-bit WAV is supported");
            audio.sample_rate = rd_u32(buf.data() + pos + 4);
            have_fmt = true;
        } else if (std::memcmp(hdr, "data", 4) == 0) {
            data_ptr = buf.data() + pos;
            data_len = len;
        }
        pos += len + (len & 1);  // chunks are word-aligned
    }

    if (!have_fmt) fail(path, "missing fmt chunk");
    if (!data_ptr) fail(path, "missing data chunk");
    if (data_len % 2 != 0) fail(path, "odd data chunk length");
    if (audio.sample_rate == 0) fail(path, "zero sample rate");

    audio.samples.resize(data_len / 2);
    for (std::size_t i = 0; i < audio.samples.size(); ++i)
        audio.samples[i] = static_cast<std::int16_t>(rd_u16(data_ptr + 2 * i));
    return audio;
}

void write_wav(const RawAudio& audio, const std::string& path) {
    if (audio.sample_rate == 0) fail(path, "zero sample rate");
    const std::uint32_t data_len = static_cast<std::uint32_t>(audio.samples.size() * 2);

    std::vector<std::uint8_t> out;
    out.reserve(44 + data_len);
    wr_tag(out, "RIFF");
    wr_u32(out, 36 + data_len);
    wr_tag(out, "WAVE");
    wr_tag(out, "fmt ");
    wr_u32(out, 16);
    wr_u16(out, 1);  // PCM
    wr_u16(out, 1);  // mono
    wr_u32(out, audio.sample_rate);
    wr_u32(out, audio.sample_rate * 2);  // byte rate
    wr_u16(out, 2);                      // block align
    wr_u16(out, 16);                     // bits per sample
    wr_tag(out, "data");
    wr_u32(out, data_len);
    for (std::int16_t s : audio.samples)
        wr_u16(out, static_cast<std::uint16_t>(s));

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) fail(path, "cannot open for writing");
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!f) fail(path, "write failed");
}

}  // namespace uinr::detail
