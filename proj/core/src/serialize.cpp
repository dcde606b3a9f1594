// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "uinr/serialize.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace uinr {

namespace {

[[noreturn]] void fail(const std::string& path, const char* what) {
    throw std::runtime_error(path + ": " + what);
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void put_f64(std::vector<std::uint8_t>& out, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<std::uint8_t>((bits >> (8 * i)) & 0xff));
}

struct Reader {
    const std::uint8_t* p;
    std::size_t left;
    const std::string& path;

    void need(std::size_t n) {
        if (left < n) fail(path, "truncated file");
    }
    std::uint16_t u16() {
        need(2);
        const std::uint16_t v = static_cast<std::uint16_t>(p[0] | (p[1] << 8));
        p += 2;
        left -= 2;
        return v;
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
        p += 4;
        left -= 4;
        return v;
    }
    std::uint8_t u8() {
        need(1);
        const std::uint8_t v = p[0];
        p += 1;
        left -= 1;
        return v;
    }
    double f64() {
        need(8);
        std::uint64_t bits = 0;
        for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
        p += 8;
        left -= 8;
        return std::bit_cast<double>(bits);
    }
};

}  // namespace

std::int64_t model_file_size(const ModelSpec& spec) {
    spec.validate();
    const std::int64_t header = 35 + 4 * static_cast<std::int64_t>(spec.hidden_widths.size());
    return header + 8 * (spec.weight_count() + spec.bias_count());
}

void save_model(const std::string& path, const ModelSpec& spec, const ParamSet& params) {
    spec.validate();
    if (!params.congruent_with(spec)) fail(path, "params do not match spec");

    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(model_file_size(spec)));
    out.insert(out.end(), kModelFileMagic, kModelFileMagic + 4);
    put_u16(out, kModelFileVersion);
    put_u32(out, static_cast<std::uint32_t>(spec.in_dim));
    put_u32(out, static_cast<std::uint32_t>(spec.out_dim));
    put_u32(out, static_cast<std::uint32_t>(spec.hidden_widths.size()));
    for (int w : spec.hidden_widths) put_u32(out, static_cast<std::uint32_t>(w));
    put_f64(out, spec.omega0_first);
    put_f64(out, spec.omega0_hidden);
    out.push_back(static_cast<std::uint8_t>(spec.activation));

    for (const auto& layer : params.layers) {
        for (Eigen::Index i = 0; i < layer.weights.size(); ++i)
            put_f64(out, layer.weights.data()[i]);
        for (Eigen::Index i = 0; i < layer.biases.size(); ++i) put_f64(out, layer.biases[i]);
    }

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) fail(path, "cannot open for writing");
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!f) fail(path, "write failed");
}

std::pair<ModelSpec, ParamSet> load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());

    Reader r{buf.data(), buf.size(), path};
    r.need(4);
    if (std::memcmp(r.p, kModelFileMagic, 4) != 0) fail(path, "bad magic");
    r.p += 4;
    r.left -= 4;
    if (r.u16() != kModelFileVersion) fail(path, "unsupported version");

    ModelSpec spec;
    spec.in_dim = static_cast<int>(r.u32());
    spec.out_dim = static_cast<int>(r.u32());
    const std::uint32_t n_hidden = r.u32();
    if (n_hidden > 1024) fail(path, "implausible hidden layer count");
    spec.hidden_widths.resize(n_hidden);
    for (auto& w : spec.hidden_widths) w = static_cast<int>(r.u32());
    spec.omega0_first = r.f64();
    spec.omega0_hidden = r.f64();
    const std::uint8_t act = r.u8();
    if (act != static_cast<std::uint8_t>(Activation::Sine)) fail(path, "unknown activation");
    spec.activation = Activation::Sine;

    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }

    const std::int64_t n_params = spec.weight_count() + spec.bias_count();
    if (r.left != static_cast<std::size_t>(n_params) * 8)
        fail(path, "payload length does not match header");

    ParamSet params = ParamSet::zeros(spec);
    for (auto& layer : params.layers) {
        for (Eigen::Index i = 0; i < layer.weights.size(); ++i) layer.weights.data()[i] = r.f64();
        for (Eigen::Index i = 0; i < layer.biases.size(); ++i) layer.biases[i] = r.f64();
    }
    return {std::move(spec), std::move(params)};
}

}  // namespace uinr
