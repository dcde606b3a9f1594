// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include "uinr/model.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace uinr {

// Model file layout, all little-endian: magic "UINR", u16 version, u32
// in_dim/out_dim/n_hidden, u32 per hidden width, f64 omega0_first and
// omega0_hidden, u8 activation id, then every parameter as f64 in layout
// order (per layer: weights row-major, then biases). Carries no key, mask,
// or phase metadata of any kind.
inline constexpr std::uint16_t kModelFileVersion = 1;
inline constexpr char kModelFileMagic[4] = {'U', 'I', 'N', 'R'};

// Total byte length of the file for a spec: 35 + 4*n_hidden header bytes
// plus 8 bytes per parameter.
std::int64_t model_file_size(const ModelSpec& spec);

// Round trips are bit-exact. load_model rejects bad magic, unknown versions,
// malformed specs, and payloads whose length does not match the header.
void save_model(const std::string& path, const ModelSpec& spec, const ParamSet& params);
std::pair<ModelSpec, ParamSet> load_model(const std::string& path);

}  // namespace uinr
