// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include "uinr/model.hpp"

namespace uinr {

// Sine MLP evaluation: y = A_L(sin(w_{L-1} A_{L-1}(... sin(w_0 A_0 u) ...))),
// final layer affine. When `effective` is given, each weight is multiplied by
// its mask coefficient before use; biases are never masked.
Mat forward(const ModelSpec& spec, const ParamSet& params, const Mat& coords,
            const WeightMask* effective = nullptr);

// Mean of squared component-wise error over every scalar element.
double loss_mse(const Mat& pred, const Mat& target);

// Analytic gradient of loss_mse(forward(coords), targets) w.r.t. every
// parameter. Weight positions zeroed by `effective` get exactly zero gradient.
// Optionally reports the loss of the same pass through `loss_out`.
Gradients backward(const ModelSpec& spec, const ParamSet& params, const Mat& coords,
                   const Mat& targets, const WeightMask* effective = nullptr,
                   double* loss_out = nullptr);

namespace detail {
// Masked weights with +0.0 at masked-out entries regardless of the stored
// value's sign, so two ParamSets that differ only outside the mask produce
// bit-identical products.
Mat apply_mask(const Mat& weights, const Mat& mask);
}  // namespace detail

}  // namespace uinr
