// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include "uinr/model.hpp"
#include "uinr/rng.hpp"

#include <cstdint>
#include <vector>

namespace uinr {

// Pre-shared key. The whole consensus (init values, ranking, mask) is a pure
// function of this value plus (spec, ratio, scope).
struct StegaKey {
    std::uint64_t value = 0;
};

enum class MaskScope : std::uint8_t { Global = 0, PerLayer = 1 };

// Binary selection over weight positions, flat layout: layers in order, each
// weight matrix row-major. Biases have no mask positions.
struct StegaMask {
    std::vector<std::uint8_t> bits;
    double ratio = 0.0;
    MaskScope scope = MaskScope::Global;
    std::size_t selected_count = 0;
};

// Keyed deterministic stream: SplitMix64(key) expands to the xoshiro256**
// state; doubles are (next64 >> 11) * 2^-53.
Xoshiro256ss seed_stream(StegaKey key);

// SIREN initialization drawn from seed_stream(key) in layout order (per layer:
// weights row-major, then biases). First layer U(-1/fan_in, 1/fan_in), deeper
// layers U(-sqrt(6/fan_in)/omega0_hidden, +sqrt(6/fan_in)/omega0_hidden),
// biases U(-1/sqrt(fan_in), +1/sqrt(fan_in)).
ParamSet init_params(const ModelSpec& spec, StegaKey key);

// Algorithm: reconstruct the keyed init, rank |w| descending (ties to the
// lower flat index), select the top floor(ratio * N_w) positions. PerLayer
// applies the same rule inside each weight matrix independently.
StegaMask make_mask(const ModelSpec& spec, StegaKey key, double ratio, MaskScope scope);

// Expands mask bits into per-layer 0.0/1.0 matrices usable as an effective
// forward mask.
WeightMask to_weight_mask(const ModelSpec& spec, const StegaMask& mask);

}  // namespace uinr
