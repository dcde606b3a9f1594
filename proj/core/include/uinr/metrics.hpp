// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include "uinr/media.hpp"
#include "uinr/model.hpp"

namespace uinr {

// Table-style image fidelity summary. psnr_db is +infinity when the inputs
// are identical.
struct MetricReport {
    double psnr_db = 0.0;
    double ssim = 0.0;
    double apd = 0.0;
    double rmse = 0.0;
};

// Per-sample squared error statistics in normalized amplitude units
// (population standard deviation).
struct AudioMseReport {
    double mse_mean = 0.0;
    double mse_std = 0.0;
};

// All comparisons de-normalize values to the unquantized 0..255 scale,
// clamped; quantization happens only in the media codecs.
double psnr(const MediaTensor& a, const MediaTensor& b);
double ssim(const MediaTensor& a, const MediaTensor& b);
double apd(const MediaTensor& a, const MediaTensor& b);
double rmse(const MediaTensor& a, const MediaTensor& b);
MetricReport image_metrics(const MediaTensor& a, const MediaTensor& b);

AudioMseReport audio_mse_stats(const MediaTensor& a, const MediaTensor& b);

// Value-matrix cores used by the pipeline report, same de-normalization.
double psnr_values(const Mat& a, const Mat& b);
double apd_values(const Mat& a, const Mat& b);
double rmse_values(const Mat& a, const Mat& b);

}  // namespace uinr
