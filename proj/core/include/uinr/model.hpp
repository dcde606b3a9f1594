// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace uinr {

// Row-major throughout: the flat parameter order used by masks, pruning and
// serialization is then a straight walk over Matrix::data().
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::VectorXd;

enum class Activation : std::uint8_t { Sine = 0 };

// Architecture descriptor. Parameter counts and the flat weight layout are
// pure functions of this struct.
struct ModelSpec {
    int in_dim = 2;
    int out_dim = 3;
    std::vector<int> hidden_widths;
    double omega0_first = 30.0;
    double omega0_hidden = 30.0;
    Activation activation = Activation::Sine;

    // Affine maps, input to output: hidden_widths.size() + 1.
    int layer_count() const { return static_cast<int>(hidden_widths.size()) + 1; }
    int layer_in(int layer) const;
    int layer_out(int layer) const;
    // Frequency applied to layer's pre-activation; the last layer is affine.
    double omega(int layer) const { return layer == 0 ? omega0_first : omega0_hidden; }

    std::int64_t weight_count() const;            // N_w
    std::int64_t bias_count() const;              // N_b
    std::int64_t layer_weight_count(int layer) const;
    std::int64_t layer_weight_offset(int layer) const;  // base of layer in flat weight space

    void validate() const;  // throws std::invalid_argument on a malformed spec

    bool operator==(const ModelSpec&) const = default;
};

// Weights and biases of one network. layers[l].weights is out×in, row-major;
// the flat weight index space enumerates layers in order, each matrix row by row.
struct ParamSet {
    struct Layer {
        Mat weights;
        Vec biases;
    };
    std::vector<Layer> layers;

    static ParamSet zeros(const ModelSpec& spec);

    bool congruent_with(const ModelSpec& spec) const;
    bool all_finite() const;

    double* flat_weight(const ModelSpec& spec, std::int64_t flat_index);
    const double* flat_weight(const ModelSpec& spec, std::int64_t flat_index) const;
};

// Per-parameter partial derivatives, shape-congruent with its ParamSet.
using Gradients = ParamSet;

// 0/1 coefficients over weights only; multiplies into the forward pass.
struct WeightMask {
    std::vector<Mat> weights;

    static WeightMask ones(const ModelSpec& spec);
    WeightMask complement() const;
};

// 0/1 coefficients over every parameter; selects what the optimizer may touch.
struct ParamMask {
    struct Layer {
        Mat weights;
        Vec biases;
    };
    std::vector<Layer> layers;

    static ParamMask all_trainable(const ModelSpec& spec);
    static ParamMask none_trainable(const ModelSpec& spec);
};

struct TrainConfig {
    double learning_rate = 1e-4;
    std::int64_t steps = 0;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_epsilon = 1e-8;
    std::int64_t batch = 0;  // 0 = full batch
    std::uint64_t sampler_seed = 0;

    void validate() const;
};

}  // namespace uinr
