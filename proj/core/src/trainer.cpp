// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "uinr/trainer.hpp"

#include "uinr/rng.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace uinr {

void adam_step(ParamSet& params, const Gradients& grads, AdamState& state,
               const TrainConfig& cfg, const ParamMask& trainable) {
    const std::size_t L = params.layers.size();
    if (grads.layers.size() != L || state.m.layers.size() != L || trainable.layers.size() != L)
        throw std::invalid_argument("adam_step: mismatched layer counts");

    state.step += 1;
    const double b1 = cfg.adam_beta1;
    const double b2 = cfg.adam_beta2;
    const double c1 = 1.0 - std::pow(b1, static_cast<double>(state.step));
    const double c2 = 1.0 - std::pow(b2, static_cast<double>(state.step));
    const double lr = cfg.learning_rate;
    const double eps = cfg.adam_epsilon;

    auto update = [&](double* p, double* m, double* v, const double* g, const double* t,
                      std::ptrdiff_t n) {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            if (t[i] == 0.0) continue;
            if (!std::isfinite(g[i]))
                throw std::runtime_error("adam_step: non-finite gradient");
            m[i] = b1 * m[i] + (1.0 - b1) * g[i];
            v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
            const double mh = m[i] / c1;
            const double vh = v[i] / c2;
            p[i] -= lr * mh / (std::sqrt(vh) + eps);
        }
    };

    for (std::size_t li = 0; li < L; ++li) {
        auto& pl = params.layers[li];
        auto& ml = state.m.layers[li];
        auto& vl = state.v.layers[li];
        const auto& gl = grads.layers[li];
        const auto& tl = trainable.layers[li];
        update(pl.weights.data(), ml.weights.data(), vl.weights.data(), gl.weights.data(),
               tl.weights.data(), pl.weights.size());
        update(pl.biases.data(), ml.biases.data(), vl.biases.data(), gl.biases.data(),
               tl.biases.data(), pl.biases.size());
    }
}

namespace {

// Draws batch row indices uniformly with replacement from [0, n).
std::vector<Eigen::Index> draw_batch(Xoshiro256ss& rng, Eigen::Index n, Eigen::Index batch) {
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(batch));
    for (auto& i : idx)
        i = static_cast<Eigen::Index>(rng.next_below(static_cast<std::uint64_t>(n)));
    return idx;
}

}  // namespace

FitResult fit(const ModelSpec& spec, ParamSet params, const Mat& coords, const Mat& targets,
              const TrainConfig& cfg, const ParamMask& trainable, const WeightMask* effective) {
    spec.validate();
    if (!params.congruent_with(spec))
        throw std::invalid_argument("fit: params do not match spec");
    if (coords.rows() != targets.rows())
        throw std::invalid_argument("fit: coords/targets row mismatch");
    if (coords.rows() == 0)
        throw std::invalid_argument("fit: empty dataset");
    if (coords.cols() != spec.in_dim || targets.cols() != spec.out_dim)
        throw std::invalid_argument("fit: dataset dims do not match spec");
    if (cfg.steps < 0)
        throw std::invalid_argument("fit: negative step count");

    const Eigen::Index n = coords.rows();
    // batch 0 = automatic: full batch up to 2^16 coordinates, seeded 2^16
    // minibatches beyond that.
    Eigen::Index batch = static_cast<Eigen::Index>(cfg.batch);
    if (batch == 0 && n > (Eigen::Index{1} << 16)) batch = Eigen::Index{1} << 16;
    const bool full_batch = batch == 0 || batch >= n;
    Xoshiro256ss sampler(cfg.sampler_seed);

    AdamState state = AdamState::init(spec);
    Mat bc, bt;
    for (std::int64_t s = 0; s < cfg.steps; ++s) {
        double loss = 0.0;
        Gradients grads;
        if (full_batch) {
            grads = backward(spec, params, coords, targets, effective, &loss);
        } else {
            const auto idx = draw_batch(sampler, n, batch);
            bc.resize(static_cast<Eigen::Index>(idx.size()), coords.cols());
            bt.resize(static_cast<Eigen::Index>(idx.size()), targets.cols());
            for (std::size_t r = 0; r < idx.size(); ++r) {
                bc.row(static_cast<Eigen::Index>(r)) = coords.row(idx[r]);
                bt.row(static_cast<Eigen::Index>(r)) = targets.row(idx[r]);
            }
            grads = backward(spec, params, bc, bt, effective, &loss);
        }
        if (!std::isfinite(loss)) throw DivergenceError(s);
        adam_step(params, grads, state, cfg, trainable);
    }

    FitResult res;
    res.final_loss = loss_mse(forward(spec, params, coords, effective), targets);
    if (!std::isfinite(res.final_loss)) throw DivergenceError(cfg.steps);
    res.steps_run = cfg.steps;
    res.params = std::move(params);
    return res;
}

}  // namespace uinr
