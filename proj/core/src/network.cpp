// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "uinr/network.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace uinr {

namespace {

void check_inputs(const ModelSpec& spec, const ParamSet& params, const Mat& coords,
                  const WeightMask* effective) {
    if (!params.congruent_with(spec))
        throw std::invalid_argument("forward: params do not match spec");
    if (coords.cols() != spec.in_dim)
        throw std::invalid_argument("forward: coords have " + std::to_string(coords.cols()) +
                                    " columns, spec expects " + std::to_string(spec.in_dim));
    if (effective) {
        if (static_cast<int>(effective->weights.size()) != spec.layer_count())
            throw std::invalid_argument("forward: mask layer count mismatch");
        for (int l = 0; l < spec.layer_count(); ++l) {
            const Mat& m = effective->weights[static_cast<std::size_t>(l)];
            if (m.rows() != spec.layer_out(l) || m.cols() != spec.layer_in(l))
                throw std::invalid_argument("forward: mask shape mismatch at layer " +
                                            std::to_string(l));
        }
    }
}

std::vector<Mat> effective_weights(const ModelSpec& spec, const ParamSet& params,
                                   const WeightMask* effective) {
    std::vector<Mat> w;
    w.reserve(params.layers.size());
    for (int l = 0; l < spec.layer_count(); ++l) {
        const Mat& raw = params.layers[static_cast<std::size_t>(l)].weights;
        w.push_back(effective ? detail::apply_mask(raw, effective->weights[static_cast<std::size_t>(l)])
                              : raw);
    }
    return w;
}

}  // namespace

Mat detail::apply_mask(const Mat& weights, const Mat& mask) {
    return (mask.array() != 0.0).select(weights, Mat::Zero(weights.rows(), weights.cols()));
}

Mat forward(const ModelSpec& spec, const ParamSet& params, const Mat& coords,
            const WeightMask* effective) {
    check_inputs(spec, params, coords, effective);
    const std::vector<Mat> w = effective_weights(spec, params, effective);

    Mat h = coords;
    const int last = spec.layer_count() - 1;
    for (int l = 0; l <= last; ++l) {
        Mat z = h * w[static_cast<std::size_t>(l)].transpose();
        z.rowwise() += params.layers[static_cast<std::size_t>(l)].biases.transpose();
        if (l == last) return z;
        h = (spec.omega(l) * z.array()).sin();
    }
    return h;  // unreachable; layer_count() >= 1
}

double loss_mse(const Mat& pred, const Mat& target) {
    if (pred.rows() != target.rows() || pred.cols() != target.cols())
        throw std::invalid_argument("loss_mse: shape mismatch");
    if (pred.size() == 0) throw std::invalid_argument("loss_mse: empty batch");
    return (pred - target).array().square().sum() / static_cast<double>(pred.size());
}

Gradients backward(const ModelSpec& spec, const ParamSet& params, const Mat& coords,
                   const Mat& targets, const WeightMask* effective, double* loss_out) {
    check_inputs(spec, params, coords, effective);
    if (targets.rows() != coords.rows())
        throw std::invalid_argument("backward: targets length mismatch");
    if (targets.cols() != spec.out_dim)
        throw std::invalid_argument("backward: targets have wrong dimension");
    if (coords.rows() == 0) throw std::invalid_argument("backward: empty batch");

    const std::vector<Mat> w = effective_weights(spec, params, effective);
    const int last = spec.layer_count() - 1;

    // Forward pass keeping pre-activations and layer inputs.
    std::vector<Mat> input(static_cast<std::size_t>(last) + 1);   // h_l fed into layer l
    std::vector<Mat> pre(static_cast<std::size_t>(last) + 1);     // z_l = A_l(h_l)
    Mat h = coords;
    for (int l = 0; l <= last; ++l) {
        input[static_cast<std::size_t>(l)] = h;
        Mat z = h * w[static_cast<std::size_t>(l)].transpose();
        z.rowwise() += params.layers[static_cast<std::size_t>(l)].biases.transpose();
        pre[static_cast<std::size_t>(l)] = z;
        if (l < last) h = (spec.omega(l) * z.array()).sin();
    }
    const Mat& out = pre[static_cast<std::size_t>(last)];

    if (loss_out) *loss_out = loss_mse(out, targets);

    Gradients grads = ParamSet::zeros(spec);
    Mat dz = (2.0 / static_cast<double>(out.size())) * (out - targets);
    for (int l = last; l >= 0; --l) {
        const std::size_t li = static_cast<std::size_t>(l);
        grads.layers[li].weights = dz.transpose() * input[li];
        grads.layers[li].biases = dz.colwise().sum().transpose();
        if (effective)
            grads.layers[li].weights =
                detail::apply_mask(grads.layers[li].weights, effective->weights[li]);
        if (l > 0) {
            const Mat dh = dz * w[li];
            const double om = spec.omega(l - 1);
            dz = dh.array() * (om * pre[li - 1].array()).cos() * om;
        }
    }
    return grads;
}

}  // namespace uinr
