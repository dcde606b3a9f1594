// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0
//
// Test-only reference implementations and fixture generators. Everything
// here is deliberately written straight-line, without Eigen expressions, so
// library results are checked against structurally different code.

#pragma once

#include "uinr/media.hpp"
#include "uinr/metrics.hpp"
#include "uinr/model.hpp"
#include "uinr/network.hpp"
#include "uinr/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace uinr::testing {

// ---------------------------------------------------------------- forward

// Layer recurrence evaluated scalar by scalar.
inline std::vector<double> ref_forward_one(const ModelSpec& spec, const ParamSet& params,
                                           const std::vector<double>& coord) {
    std::vector<double> h = coord;
    for (int l = 0; l < spec.layer_count(); ++l) {
        const auto& layer = params.layers[static_cast<std::size_t>(l)];
        const int rows = spec.layer_out(l);
        const int cols = spec.layer_in(l);
        std::vector<double> z(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r) {
            double acc = layer.biases[r];
            for (int c = 0; c < cols; ++c)
                acc += layer.weights(r, c) * h[static_cast<std::size_t>(c)];
            z[static_cast<std::size_t>(r)] = acc;
        }
        if (l == spec.layer_count() - 1) return z;
        for (double& v : z) v = std::sin(spec.omega(l) * v);
        h = std::move(z);
    }
    return h;
}

inline Mat ref_forward(const ModelSpec& spec, const ParamSet& params, const Mat& coords) {
    Mat out(coords.rows(), spec.out_dim);
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
        std::vector<double> c(static_cast<std::size_t>(coords.cols()));
        for (Eigen::Index j = 0; j < coords.cols(); ++j)
            c[static_cast<std::size_t>(j)] = coords(i, j);
        const auto y = ref_forward_one(spec, params, c);
        for (Eigen::Index j = 0; j < out.cols(); ++j)
            out(i, j) = y[static_cast<std::size_t>(j)];
    }
    return out;
}

// ---------------------------------------------------- finite differences

// Central differences of loss_mse(forward(...)) over every parameter.
inline Gradients fd_gradients(const ModelSpec& spec, ParamSet params, const Mat& coords,
                              const Mat& targets, const WeightMask* effective = nullptr,
                              double h = 1e-6) {
    Gradients g = ParamSet::zeros(spec);
    auto loss_at = [&]() { return loss_mse(forward(spec, params, coords, effective), targets); };
    for (std::size_t l = 0; l < params.layers.size(); ++l) {
        auto probe = [&](double* p, double* out, Eigen::Index n) {
            for (Eigen::Index i = 0; i < n; ++i) {
                const double saved = p[i];
                p[i] = saved + h;
                const double up = loss_at();
                p[i] = saved - h;
                const double dn = loss_at();
                p[i] = saved;
                out[i] = (up - dn) / (2.0 * h);
            }
        };
        probe(params.layers[l].weights.data(), g.layers[l].weights.data(),
              params.layers[l].weights.size());
        probe(params.layers[l].biases.data(), g.layers[l].biases.data(),
              params.layers[l].biases.size());
    }
    return g;
}

// ------------------------------------------------------------ scalar Adam

// One-parameter Adam trace with bias correction.
inline double scalar_adam(double p, const std::vector<double>& grads, double lr = 1e-4,
                          double b1 = 0.9, double b2 = 0.999, double eps = 1e-8) {
    double m = 0.0, v = 0.0;
    for (std::size_t t = 0; t < grads.size(); ++t) {
        const double g = grads[t];
        m = b1 * m + (1.0 - b1) * g;
        v = b2 * v + (1.0 - b2) * g * g;
        const double mh = m / (1.0 - std::pow(b1, static_cast<double>(t + 1)));
        const double vh = v / (1.0 - std::pow(b2, static_cast<double>(t + 1)));
        p -= lr * mh / (std::sqrt(vh) + eps);
    }
    return p;
}

// ---------------------------------------------------------------- metrics

inline double ref_denorm(double v) {
    double d = (v + 1.0) * 127.5;
    if (d < 0.0) d = 0.0;
    if (d > 255.0) d = 255.0;
    return d;
}

inline double ref_psnr(const MediaTensor& a, const MediaTensor& b) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < a.values.size(); ++i) {
        const double d = ref_denorm(a.values.data()[i]) - ref_denorm(b.values.data()[i]);
        acc += d * d;
    }
    const double mse = acc / static_cast<double>(a.values.size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

inline double ref_apd(const MediaTensor& a, const MediaTensor& b) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < a.values.size(); ++i)
        acc += std::fabs(ref_denorm(a.values.data()[i]) - ref_denorm(b.values.data()[i]));
    return acc / static_cast<double>(a.values.size());
}

inline double ref_rmse(const MediaTensor& a, const MediaTensor& b) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < a.values.size(); ++i) {
        const double d = ref_denorm(a.values.data()[i]) - ref_denorm(b.values.data()[i]);
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(a.values.size()));
}

// Direct 2D-window SSIM (no separable pass), averaged over channels/frames.
inline double ref_ssim(const MediaTensor& ta, const MediaTensor& tb) {
    constexpr int win = 11;
    constexpr double sigma = 1.5;
    double kern[win][win];
    double ksum = 0.0;
    for (int i = 0; i < win; ++i)
        for (int j = 0; j < win; ++j) {
            const double dx = i - win / 2, dy = j - win / 2;
            kern[i][j] = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
            ksum += kern[i][j];
        }
    for (auto& row : kern)
        for (double& v : row) v /= ksum;

    const double c1 = (0.01 * 255.0) * (0.01 * 255.0);
    const double c2 = (0.03 * 255.0) * (0.03 * 255.0);
    const std::int64_t h = ta.shape.height, w = ta.shape.width;

    double total = 0.0;
    std::int64_t planes = 0;
    for (std::int64_t f = 0; f < ta.shape.frames; ++f)
        for (std::int64_t ch = 0; ch < ta.shape.channels; ++ch) {
            const std::int64_t base = f * h * w;
            auto at = [&](const MediaTensor& t, std::int64_t r, std::int64_t c) {
                return ref_denorm(t.values(base + r * w + c, ch));
            };
            double acc = 0.0;
            std::int64_t n = 0;
            for (std::int64_t r = 0; r + win <= h; ++r)
                for (std::int64_t c = 0; c + win <= w; ++c) {
                    double ma = 0, mb = 0, m2a = 0, m2b = 0, mab = 0;
                    for (int i = 0; i < win; ++i)
                        for (int j = 0; j < win; ++j) {
                            const double va = at(ta, r + i, c + j);
                            const double vb = at(tb, r + i, c + j);
                            const double k = kern[i][j];
                            ma += k * va;
                            mb += k * vb;
                            m2a += k * va * va;
                            m2b += k * vb * vb;
                            mab += k * va * vb;
                        }
                    const double sa = m2a - ma * ma;
                    const double sb = m2b - mb * mb;
                    const double sab = mab - ma * mb;
                    acc += ((2 * ma * mb + c1) * (2 * sab + c2)) /
                           ((ma * ma + mb * mb + c1) * (sa + sb + c2));
                    ++n;
                }
            total += acc / static_cast<double>(n);
            ++planes;
        }
    return total / static_cast<double>(planes);
}

// ---------------------------------------------------------------- ranking

// Spearman rank correlation with average ranks for ties.
inline double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    auto ranks = [n](const std::vector<double>& v) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        std::vector<double> rank(n);
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
            const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
            for (std::size_t k = i; k <= j; ++k) rank[order[k]] = avg;
            i = j + 1;
        }
        return rank;
    };
    const auto rx = ranks(xs);
    const auto ry = ranks(ys);
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

// --------------------------------------------------------------- fixtures

// Band-limited sinusoid mixture quantized to the 8-bit grid, i.e. exactly
// what loading a PNG of this picture would produce.
inline MediaTensor make_test_image(std::int64_t h, std::int64_t w, std::int64_t c,
                                   std::uint64_t seed) {
    Xoshiro256ss rng(seed);
    struct Wave {
        double fx, fy, amp;
        double phase[3];
    };
    std::vector<Wave> waves;
    for (int k = 0; k < 6; ++k) {
        Wave wv{};
        wv.fx = 0.5 + 3.0 * rng.next_double();
        wv.fy = 0.5 + 3.0 * rng.next_double();
        wv.amp = 1.0 / (1.0 + k);
        for (double& p : wv.phase) p = 6.283185307179586 * rng.next_double();
        waves.push_back(wv);
    }

    const MediaShape shape = MediaShape::image(h, w, c);
    Mat values(shape.count(), shape.out_dim());
    for (std::int64_t r = 0; r < h; ++r)
        for (std::int64_t cc = 0; cc < w; ++cc) {
            const double x = w == 1 ? 0.0 : static_cast<double>(cc) / static_cast<double>(w - 1);
            const double y = h == 1 ? 0.0 : static_cast<double>(r) / static_cast<double>(h - 1);
            for (std::int64_t ch = 0; ch < c; ++ch) {
                double v = 0.0;
                for (const Wave& wv : waves)
                    v += wv.amp * std::sin(6.283185307179586 * (wv.fx * x + wv.fy * y) +
                                           wv.phase[ch]);
                v = 0.85 * std::tanh(v);  // keep inside (-1, 1) with soft contrast
                const double p = std::nearbyint((v + 1.0) * 127.5);
                values(r * w + cc, ch) = std::clamp(p, 0.0, 255.0) / 127.5 - 1.0;
            }
        }
    return media_from_values(shape, std::move(values));
}

// Harmonic mixture with a slow amplitude envelope, quantized to PCM16.
inline MediaTensor make_test_audio(std::int64_t t, std::uint32_t rate, std::uint64_t seed) {
    Xoshiro256ss rng(seed);
    const double f0 = 180.0 + 140.0 * rng.next_double();
    const double p1 = 6.283185307179586 * rng.next_double();
    const double p2 = 6.283185307179586 * rng.next_double();
    const double env_f = 1.0 + 2.0 * rng.next_double();

    const MediaShape shape = MediaShape::audio(t);
    Mat values(t, 1);
    for (std::int64_t n = 0; n < t; ++n) {
        const double sec = static_cast<double>(n) / static_cast<double>(rate);
        double a = 0.55 * std::sin(6.283185307179586 * f0 * sec) +
                   0.25 * std::sin(6.283185307179586 * 2.0 * f0 * sec + p1) +
                   0.12 * std::sin(6.283185307179586 * 3.0 * f0 * sec + p2);
        a *= 0.55 + 0.35 * std::sin(6.283185307179586 * env_f * sec);
        const double s = std::nearbyint(std::clamp(a, -1.0, 1.0) * 32767.0);
        // + 0.0 lands on the decoder's grid: PCM sample 0 reads back as +0.0.
        values(n, 0) = std::clamp(s, -32767.0, 32767.0) / 32767.0 + 0.0;
    }
    return media_from_values(shape, std::move(values), rate);
}

// A drifting version of the image fixture, one shift per frame.
inline MediaTensor make_test_video(std::int64_t f, std::int64_t h, std::int64_t w,
                                   std::int64_t c, std::uint64_t seed) {
    const MediaShape shape = MediaShape::video(f, h, w, c);
    Mat values(shape.count(), shape.out_dim());
    for (std::int64_t fr = 0; fr < f; ++fr) {
        const MediaTensor frame = make_test_image(h, w, c, seed + 1000 * fr);
        values.middleRows(fr * h * w, h * w) = frame.values;
    }
    return media_from_values(shape, std::move(values));
}

// ------------------------------------------------------------- bit equality

inline bool bits_equal(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return std::memcmp(a.data(), b.data(), sizeof(double) * static_cast<std::size_t>(a.size())) ==
           0;
}

inline bool bits_equal(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    return std::memcmp(a.data(), b.data(), sizeof(double) * static_cast<std::size_t>(a.size())) ==
           0;
}

inline bool bits_equal(const ParamSet& a, const ParamSet& b) {
    if (a.layers.size() != b.layers.size()) return false;
    for (std::size_t l = 0; l < a.layers.size(); ++l)
        if (!bits_equal(a.layers[l].weights, b.layers[l].weights) ||
            !bits_equal(a.layers[l].biases, b.layers[l].biases))
            return false;
    return true;
}

// ----------------------------------------------------------------- tempdir

struct TempDir {
    std::string path;

    TempDir() {
        std::string tmpl = (std::filesystem::temp_directory_path() / "uinr-test-XXXXXX").string();
        std::vector<char> buf(tmpl.begin(), tmpl.end());
        buf.push_back('\0');
        if (!mkdtemp(buf.data())) throw std::runtime_error("mkdtemp failed");
        path = buf.data();
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return path + "/" + name; }
};

inline std::vector<std::uint8_t> read_bytes(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw std::runtime_error(path + ": cannot open");
    std::vector<std::uint8_t> bytes;
    std::uint8_t buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), f)) > 0) bytes.insert(bytes.end(), buf, buf + n);
    std::fclose(f);
    return bytes;
}

}  // namespace uinr::testing
