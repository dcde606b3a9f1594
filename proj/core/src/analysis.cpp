// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "uinr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace uinr {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

std::vector<SweepRow> ratio_sweep(const MediaTensor& secret, const MediaTensor& cover,
                                  const ModelSpec& spec, const HideConfig& base,
                                  const std::vector<double>& ratios) {
    for (double r : ratios)
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("ratio_sweep: ratios must lie in (0, 1)");

    std::vector<SweepRow> rows;
    rows.reserve(ratios.size());
    for (double r : ratios) {
        HideConfig cfg = base;
        cfg.ratio = r;
        const HideResult res = hide(secret, cover, spec, cfg);
        rows.push_back({r, res.report.stega_psnr_db, res.report.secret_psnr_db});
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "ratio,stega_psnr_db,secret_psnr_db\n";
    for (const SweepRow& r : rows) {
        out += fmt_double(r.ratio);
        out += ',';
        out += fmt_double(r.stega_psnr_db);
        out += ',';
        out += fmt_double(r.secret_psnr_db);
        out += '\n';
    }
    return out;
}

WeightHistogram weight_histogram(const ModelSpec& spec, const ParamSet& params,
                                 const StegaMask* mask, const HistogramSpec& hspec) {
    spec.validate();
    if (!params.congruent_with(spec))
        throw std::invalid_argument("weight_histogram: params do not match spec");
    if (!(hspec.lo < hspec.hi) || hspec.bins < 1)
        throw std::invalid_argument("weight_histogram: malformed bin spec");
    if (mask && mask->bits.size() != static_cast<std::size_t>(spec.weight_count()))
        throw std::invalid_argument("weight_histogram: mask does not match spec");

    WeightHistogram hist;
    hist.spec = hspec;
    const std::size_t nbins = static_cast<std::size_t>(hspec.bins) + 2;
    hist.total.assign(nbins, 0);
    hist.split = mask != nullptr;
    if (hist.split) {
        hist.secret.assign(nbins, 0);
        hist.cover.assign(nbins, 0);
    }

    const double width = (hspec.hi - hspec.lo) / static_cast<double>(hspec.bins);
    auto bin_of = [&](double w) -> std::size_t {
        if (w < hspec.lo) return 0;
        if (w >= hspec.hi) return nbins - 1;
        const auto b = static_cast<std::int64_t>((w - hspec.lo) / width);
        return 1 + static_cast<std::size_t>(
                       std::min<std::int64_t>(b, hspec.bins - 1));
    };

    std::int64_t flat = 0;
    for (const auto& layer : params.layers) {
        const double* w = layer.weights.data();
        for (Eigen::Index i = 0; i < layer.weights.size(); ++i, ++flat) {
            const std::size_t b = bin_of(w[i]);
            hist.total[b] += 1;
            if (hist.split) {
                if (mask->bits[static_cast<std::size_t>(flat)])
                    hist.secret[b] += 1;
                else
                    hist.cover[b] += 1;
            }
        }
    }
    return hist;
}

std::string histogram_csv(const WeightHistogram& hist) {
    std::string out = hist.split ? "bin_lo,bin_hi,total,secret,cover\n" : "bin_lo,bin_hi,total\n";
    const std::size_t nbins = hist.total.size();
    const double width =
        (hist.spec.hi - hist.spec.lo) / static_cast<double>(hist.spec.bins);
    for (std::size_t b = 0; b < nbins; ++b) {
        std::string lo, hi;
        if (b == 0) {
            lo = "-inf";
            hi = fmt_double(hist.spec.lo);
        } else if (b == nbins - 1) {
            lo = fmt_double(hist.spec.hi);
            hi = "inf";
        } else {
            lo = fmt_double(hist.spec.lo + width * static_cast<double>(b - 1));
            hi = fmt_double(hist.spec.lo + width * static_cast<double>(b));
        }
        out += lo;
        out += ',';
        out += hi;
        out += ',';
        out += std::to_string(hist.total[b]);
        if (hist.split) {
            out += ',';
            out += std::to_string(hist.secret[b]);
            out += ',';
            out += std::to_string(hist.cover[b]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace uinr
