// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "uinr/model.hpp"

#include <stdexcept>
#include <string>

namespace uinr {

int ModelSpec::layer_in(int layer) const {
    return layer == 0 ? in_dim : hidden_widths[static_cast<std::size_t>(layer) - 1];
}

int ModelSpec::layer_out(int layer) const {
    return layer == layer_count() - 1 ? out_dim
                                      : hidden_widths[static_cast<std::size_t>(layer)];
}

std::int64_t ModelSpec::layer_weight_count(int layer) const {
    return static_cast<std::int64_t>(layer_in(layer)) * layer_out(layer);
}

std::int64_t ModelSpec::weight_count() const {
    std::int64_t n = 0;
    for (int l = 0; l < layer_count(); ++l) n += layer_weight_count(l);
    return n;
}

std::int64_t ModelSpec::bias_count() const {
    std::int64_t n = 0;
    for (int l = 0; l < layer_count(); ++l) n += layer_out(l);
    return n;
}

std::int64_t ModelSpec::layer_weight_offset(int layer) const {
    std::int64_t n = 0;
    for (int l = 0; l < layer; ++l) n += layer_weight_count(l);
    return n;
}

void ModelSpec::validate() const {
    if (in_dim < 1 || out_dim < 1)
        throw std::invalid_argument("ModelSpec: in_dim and out_dim must be >= 1");
    for (int w : hidden_widths)
        if (w < 1) throw std::invalid_argument("ModelSpec: hidden widths must be >= 1");
    if (!(omega0_first > 0.0) || !(omega0_hidden > 0.0))
        throw std::invalid_argument("ModelSpec: omega0 values must be > 0");
    if (activation != Activation::Sine)
        throw std::invalid_argument("ModelSpec: unsupported activation");
}

ParamSet ParamSet::zeros(const ModelSpec& spec) {
    ParamSet p;
    p.layers.resize(static_cast<std::size_t>(spec.layer_count()));
    for (int l = 0; l < spec.layer_count(); ++l) {
        p.layers[static_cast<std::size_t>(l)].weights =
            Mat::Zero(spec.layer_out(l), spec.layer_in(l));
        p.layers[static_cast<std::size_t>(l)].biases = Vec::Zero(spec.layer_out(l));
    }
    return p;
}

bool ParamSet::congruent_with(const ModelSpec& spec) const {
    if (static_cast<int>(layers.size()) != spec.layer_count()) return false;
    for (int l = 0; l < spec.layer_count(); ++l) {
        const Layer& ly = layers[static_cast<std::size_t>(l)];
        if (ly.weights.rows() != spec.layer_out(l) || ly.weights.cols() != spec.layer_in(l))
            return false;
        if (ly.biases.size() != spec.layer_out(l)) return false;
    }
    return true;
}

bool ParamSet::all_finite() const {
    for (const Layer& ly : layers)
        if (!ly.weights.allFinite() || !ly.biases.allFinite()) return false;
    return true;
}

double* ParamSet::flat_weight(const ModelSpec& spec, std::int64_t flat_index) {
    for (int l = 0; l < spec.layer_count(); ++l) {
        const std::int64_t n = spec.layer_weight_count(l);
        if (flat_index < n) return layers[static_cast<std::size_t>(l)].weights.data() + flat_index;
        flat_index -= n;
    }
    throw std::out_of_range("ParamSet: flat weight index " + std::to_string(flat_index));
}

const double* ParamSet::flat_weight(const ModelSpec& spec, std::int64_t flat_index) const {
    return const_cast<ParamSet*>(this)->flat_weight(spec, flat_index);
}

WeightMask WeightMask::ones(const ModelSpec& spec) {
    WeightMask m;
    for (int l = 0; l < spec.layer_count(); ++l)
        m.weights.push_back(Mat::Ones(spec.layer_out(l), spec.layer_in(l)));
    return m;
}

WeightMask WeightMask::complement() const {
    WeightMask m;
    for (const Mat& w : weights) m.weights.push_back(Mat::Ones(w.rows(), w.cols()) - w);
    return m;
}

ParamMask ParamMask::all_trainable(const ModelSpec& spec) {
    ParamMask m;
    for (int l = 0; l < spec.layer_count(); ++l)
        m.layers.push_back({Mat::Ones(spec.layer_out(l), spec.layer_in(l)),
                            Vec::Ones(spec.layer_out(l))});
    return m;
}

ParamMask ParamMask::none_trainable(const ModelSpec& spec) {
    ParamMask m;
    for (int l = 0; l < spec.layer_count(); ++l)
        m.layers.push_back({Mat::Zero(spec.layer_out(l), spec.layer_in(l)),
                            Vec::Zero(spec.layer_out(l))});
    return m;
}

void TrainConfig::validate() const {
    if (!(learning_rate > 0.0)) throw std::invalid_argument("TrainConfig: learning_rate must be > 0");
    if (steps < 0) throw std::invalid_argument("TrainConfig: steps must be >= 0");
    if (!(adam_beta1 > 0.0 && adam_beta1 < 1.0) || !(adam_beta2 > 0.0 && adam_beta2 < 1.0))
        throw std::invalid_argument("TrainConfig: betas must lie in (0, 1)");
    if (batch < 0) throw std::invalid_argument("TrainConfig: batch must be >= 0");
}

}  // namespace uinr
