// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include "uinr/consensus.hpp"
#include "uinr/media.hpp"
#include "uinr/model.hpp"
#include "uinr/trainer.hpp"

#include <cstdint>

namespace uinr {

struct HideConfig {
    StegaKey key;
    double ratio = 0.3;
    MaskScope scope = MaskScope::Global;
    TrainConfig secret_train;
    TrainConfig cover_train;
};

// A trained network, nothing else. Holds no key, mask, or phase metadata, so
// it is structurally identical to a plain fitted model.
struct StegaModel {
    ModelSpec spec;
    ParamSet params;
};

struct HideReport {
    double secret_loss = 0.0;     // phase 1 final MSE on the secret grid
    double cover_loss = 0.0;      // phase 2 final MSE on the cover grid
    double secret_psnr_db = 0.0;  // phase 1 reconstruction vs secret
    double stega_psnr_db = 0.0;   // final full forward vs cover
    std::int64_t mask_selected = 0;
    bool degenerate = false;      // ratio 0 (no secret capacity) or 1 (no cover capacity)
    Mat secret_reconstruction;    // end-of-phase-1 masked forward on the secret grid
};

struct HideResult {
    StegaModel model;
    HideReport report;
};

// Two-phase embedding. Phase 1 fits the secret on the masked sub-network
// (trainable: selected weights plus all biases; complement weights act as
// zero). Phase 2 fits the cover on the remaining weights from their keyed
// init values, biases frozen, all weights active in the forward pass.
HideResult hide(const MediaTensor& secret, const MediaTensor& cover, const ModelSpec& spec,
                const HideConfig& cfg);

// Keyless inference: full-weight forward pass.
Mat render_values(const StegaModel& model, const Mat& coords);
MediaTensor render(const StegaModel& model, const MediaShape& shape,
                   std::uint32_t sample_rate = 0);

// Keyed extraction: recomputes the mask from (key, ratio, scope) and runs the
// forward pass with complement weights zeroed. With the hiding key this
// reproduces the phase-1 reconstruction bit-exactly.
Mat reveal_values(const StegaModel& model, StegaKey key, double ratio, MaskScope scope,
                  const Mat& coords);
MediaTensor reveal(const StegaModel& model, StegaKey key, double ratio, MaskScope scope,
                   const MediaShape& shape, std::uint32_t sample_rate = 0);

// Ordinary full-parameter fit from the keyed initialization.
StegaModel fit_plain(const MediaTensor& media, const ModelSpec& spec, StegaKey key,
                     const TrainConfig& cfg, double* final_loss = nullptr);

}  // namespace uinr
