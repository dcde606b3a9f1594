// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "uinr/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace uinr {

namespace {

double denorm(double v) { return std::clamp((v + 1.0) * 127.5, 0.0, 255.0); }

void check_pair(const Mat& a, const Mat& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(who) + ": shape mismatch");
    if (a.size() == 0) throw std::invalid_argument(std::string(who) + ": empty input");
}

void check_tensors(const MediaTensor& a, const MediaTensor& b, const char* who) {
    if (!(a.shape == b.shape)) throw std::invalid_argument(std::string(who) + ": shape mismatch");
    check_pair(a.values, b.values, who);
}

double mse_denorm(const Mat& a, const Mat& b) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double d = denorm(a.data()[i]) - denorm(b.data()[i]);
        acc += d * d;
    }
    return acc / static_cast<double>(a.size());
}

}  // namespace

double psnr_values(const Mat& a, const Mat& b) {
    check_pair(a, b, "psnr");
    const double mse = mse_denorm(a, b);
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double apd_values(const Mat& a, const Mat& b) {
    check_pair(a, b, "apd");
    double acc = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        acc += std::fabs(denorm(a.data()[i]) - denorm(b.data()[i]));
    return acc / static_cast<double>(a.size());
}

double rmse_values(const Mat& a, const Mat& b) {
    check_pair(a, b, "rmse");
    return std::sqrt(mse_denorm(a, b));
}

double psnr(const MediaTensor& a, const MediaTensor& b) {
    check_tensors(a, b, "psnr");
    return psnr_values(a.values, b.values);
}

double apd(const MediaTensor& a, const MediaTensor& b) {
    check_tensors(a, b, "apd");
    return apd_values(a.values, b.values);
}

double rmse(const MediaTensor& a, const MediaTensor& b) {
    check_tensors(a, b, "rmse");
    return rmse_values(a.values, b.values);
}

namespace {

constexpr int kWin = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

std::array<double, kWin> gaussian_kernel() {
    std::array<double, kWin> k{};
    double sum = 0.0;
    for (int i = 0; i < kWin; ++i) {
        const double x = static_cast<double>(i - kWin / 2);
        k[static_cast<std::size_t>(i)] = std::exp(-x * x / (2.0 * kSigma * kSigma));
        sum += k[static_cast<std::size_t>(i)];
    }
    for (double& v : k) v /= sum;
    return k;
}

// Valid-region separable Gaussian filter: (H, W) -> (H-10, W-10).
Mat filter_valid(const Mat& img) {
    static const std::array<double, kWin> k = gaussian_kernel();
    const Eigen::Index h = img.rows();
    const Eigen::Index w = img.cols();
    Mat horiz(h, w - kWin + 1);
    for (Eigen::Index r = 0; r < h; ++r)
        for (Eigen::Index c = 0; c + kWin <= w; ++c) {
            double acc = 0.0;
            for (int t = 0; t < kWin; ++t) acc += k[static_cast<std::size_t>(t)] * img(r, c + t);
            horiz(r, c) = acc;
        }
    Mat out(h - kWin + 1, w - kWin + 1);
    for (Eigen::Index r = 0; r + kWin <= h; ++r)
        for (Eigen::Index c = 0; c < out.cols(); ++c) {
            double acc = 0.0;
            for (int t = 0; t < kWin; ++t) acc += k[static_cast<std::size_t>(t)] * horiz(r + t, c);
            out(r, c) = acc;
        }
    return out;
}

double ssim_plane(const Mat& a, const Mat& b) {
    const Mat mu_a = filter_valid(a);
    const Mat mu_b = filter_valid(b);
    const Mat m2_a = filter_valid(a.cwiseProduct(a));
    const Mat m2_b = filter_valid(b.cwiseProduct(b));
    const Mat m_ab = filter_valid(a.cwiseProduct(b));

    double acc = 0.0;
    for (Eigen::Index i = 0; i < mu_a.size(); ++i) {
        const double ma = mu_a.data()[i];
        const double mb = mu_b.data()[i];
        const double va = m2_a.data()[i] - ma * ma;
        const double vb = m2_b.data()[i] - mb * mb;
        const double cov = m_ab.data()[i] - ma * mb;
        acc += ((2.0 * ma * mb + kC1) * (2.0 * cov + kC2)) /
               ((ma * ma + mb * mb + kC1) * (va + vb + kC2));
    }
    return acc / static_cast<double>(mu_a.size());
}

// De-normalized H x W plane of one channel of one frame.
Mat extract_plane(const MediaTensor& t, std::int64_t frame, std::int64_t channel) {
    const std::int64_t h = t.shape.height;
    const std::int64_t w = t.shape.width;
    const std::int64_t base = frame * h * w;
    Mat plane(h, w);
    for (std::int64_t r = 0; r < h; ++r)
        for (std::int64_t c = 0; c < w; ++c)
            plane(r, c) = denorm(t.values(base + r * w + c, channel));
    return plane;
}

}  // namespace

double ssim(const MediaTensor& a, const MediaTensor& b) {
    check_tensors(a, b, "ssim");
    if (a.shape.modality == Modality::Audio)
        throw std::invalid_argument("ssim: not defined for audio");
    if (a.shape.height < kWin || a.shape.width < kWin)
        throw std::invalid_argument("ssim: image smaller than the 11x11 window");

    double acc = 0.0;
    std::int64_t planes = 0;
    for (std::int64_t f = 0; f < a.shape.frames; ++f)
        for (std::int64_t ch = 0; ch < a.shape.channels; ++ch) {
            acc += ssim_plane(extract_plane(a, f, ch), extract_plane(b, f, ch));
            ++planes;
        }
    return acc / static_cast<double>(planes);
}

MetricReport image_metrics(const MediaTensor& a, const MediaTensor& b) {
    MetricReport r;
    r.psnr_db = psnr(a, b);
    r.ssim = ssim(a, b);
    r.apd = apd(a, b);
    r.rmse = rmse(a, b);
    return r;
}

AudioMseReport audio_mse_stats(const MediaTensor& a, const MediaTensor& b) {
    check_tensors(a, b, "audio_mse_stats");
    if (a.shape.modality != Modality::Audio)
        throw std::invalid_argument("audio_mse_stats: audio tensors required");

    const Eigen::Index n = a.values.size();
    std::vector<double> se(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const double av = std::clamp(a.values.data()[i], -1.0, 1.0);
        const double bv = std::clamp(b.values.data()[i], -1.0, 1.0);
        const double d = av - bv;
        se[static_cast<std::size_t>(i)] = d * d;
    }
    AudioMseReport rep;
    for (double e : se) rep.mse_mean += e;
    rep.mse_mean /= static_cast<double>(n);
    double var = 0.0;
    for (double e : se) var += (e - rep.mse_mean) * (e - rep.mse_mean);
    rep.mse_std = std::sqrt(var / static_cast<double>(n));
    return rep;
}

}  // namespace uinr
