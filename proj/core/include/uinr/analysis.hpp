// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include "uinr/consensus.hpp"
#include "uinr/media.hpp"
#include "uinr/model.hpp"
#include "uinr/pipeline.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace uinr {

struct SweepRow {
    double ratio = 0.0;
    double stega_psnr_db = 0.0;
    double secret_psnr_db = 0.0;
};

// hide() once per ratio with the base config's key, scope and budgets. Each
// row reproduces a standalone hide() at that ratio bit-exactly.
std::vector<SweepRow> ratio_sweep(const MediaTensor& secret, const MediaTensor& cover,
                                  const ModelSpec& spec, const HideConfig& base,
                                  const std::vector<double>& ratios);

// CSV with header `ratio,stega_psnr_db,secret_psnr_db`, LF line endings.
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct HistogramSpec {
    double lo = -0.1;
    double hi = 0.1;
    int bins = 41;
};

// Weight-value counts: bins index 0 is the underflow bin (w < lo), the last
// is the overflow bin (w >= hi). When built with a mask, secret/cover hold
// the split by membership and sum to total bin by bin.
struct WeightHistogram {
    HistogramSpec spec;
    std::vector<std::int64_t> total;
    bool split = false;
    std::vector<std::int64_t> secret;
    std::vector<std::int64_t> cover;
};

WeightHistogram weight_histogram(const ModelSpec& spec, const ParamSet& params,
                                 const StegaMask* mask = nullptr,
                                 const HistogramSpec& hspec = {});

// CSV: `bin_lo,bin_hi,total[,secret,cover]`, outlier bounds printed as
// -inf/inf, LF line endings.
std::string histogram_csv(const WeightHistogram& hist);

}  // namespace uinr
