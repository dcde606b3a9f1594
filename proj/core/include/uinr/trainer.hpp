// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include "uinr/model.hpp"
#include "uinr/network.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uinr {

// First and second moment estimates. Frozen parameters keep zero moments for
// the whole run; only positions the trainable mask admits are ever advanced.
struct AdamState {
    ParamSet m;
    ParamSet v;
    std::int64_t step = 0;

    static AdamState init(const ModelSpec& spec) {
        return {ParamSet::zeros(spec), ParamSet::zeros(spec), 0};
    }
};

// Thrown when the loss stops being finite during fit().
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(std::int64_t at_step)
        : std::runtime_error("fit: loss became non-finite at step " + std::to_string(at_step)),
          step(at_step) {}
    std::int64_t step;
};

// One bias-corrected Adam update, applied only where trainable is nonzero.
// Everything else (parameter values and moments) is left untouched.
void adam_step(ParamSet& params, const Gradients& grads, AdamState& state,
               const TrainConfig& cfg, const ParamMask& trainable);

struct FitResult {
    ParamSet params;
    double final_loss = 0.0;
    std::int64_t steps_run = 0;
};

// cfg.steps iterations of backward + adam_step over (coords, targets).
// cfg.batch 0 selects the automatic policy: full batch for datasets of up to
// 2^16 coordinates, otherwise uniform 2^16-coordinate minibatches drawn from
// a stream seeded with cfg.sampler_seed. An explicit batch size is honored
// as given (a batch covering the dataset degenerates to full batch).
// final_loss is evaluated on the full dataset with the returned parameters.
FitResult fit(const ModelSpec& spec, ParamSet params, const Mat& coords, const Mat& targets,
              const TrainConfig& cfg, const ParamMask& trainable,
              const WeightMask* effective = nullptr);

}  // namespace uinr
