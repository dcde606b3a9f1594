// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "uinr/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace uinr {

Xoshiro256ss seed_stream(StegaKey key) { return Xoshiro256ss(key.value); }

namespace {

double uniform(Xoshiro256ss& rng, double lo, double hi) {
    return lo + rng.next_double() * (hi - lo);
}

std::size_t floor_count(double ratio, std::size_t n) {
    return static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n)));
}

}  // namespace

ParamSet init_params(const ModelSpec& spec, StegaKey key) {
    spec.validate();
    Xoshiro256ss rng = seed_stream(key);
    ParamSet params = ParamSet::zeros(spec);
    for (int l = 0; l < spec.layer_count(); ++l) {
        const double fan_in = static_cast<double>(spec.layer_in(l));
        double wb;
        if (l == 0)
            wb = 1.0 / fan_in;
        else
            wb = std::sqrt(6.0 / fan_in) / spec.omega0_hidden;
        auto& layer = params.layers[static_cast<std::size_t>(l)];
        double* w = layer.weights.data();
        for (Eigen::Index i = 0; i < layer.weights.size(); ++i)
            w[i] = uniform(rng, -wb, wb);
        const double bb = 1.0 / std::sqrt(fan_in);
        for (Eigen::Index i = 0; i < layer.biases.size(); ++i)
            layer.biases[i] = uniform(rng, -bb, bb);
    }
    return params;
}

namespace {

// Marks the top-count positions of |w| over [0, n) in bits, ranking
// descending with lower-index tie-break.
void select_top(const double* w, std::size_t n, std::size_t count, std::uint8_t* bits) {
    if (count == 0) return;
    std::vector<std::uint64_t> order(n);
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    auto cmp = [w](std::uint64_t a, std::uint64_t b) {
        const double ma = std::fabs(w[a]);
        const double mb = std::fabs(w[b]);
        if (ma != mb) return ma > mb;
        return a < b;
    };
    if (count < n)
        std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count),
                         order.end(), cmp);
    for (std::size_t i = 0; i < count; ++i) bits[order[i]] = 1;
}

}  // namespace

StegaMask make_mask(const ModelSpec& spec, StegaKey key, double ratio, MaskScope scope) {
    spec.validate();
    if (!(ratio >= 0.0 && ratio <= 1.0))
        throw std::invalid_argument("make_mask: ratio outside [0, 1]");

    const ParamSet params = init_params(spec, key);
    const std::size_t nw = static_cast<std::size_t>(spec.weight_count());

    StegaMask mask;
    mask.ratio = ratio;
    mask.scope = scope;
    mask.bits.assign(nw, 0);

    if (scope == MaskScope::Global) {
        std::vector<double> flat(nw);
        std::size_t off = 0;
        for (const auto& layer : params.layers) {
            std::copy(layer.weights.data(), layer.weights.data() + layer.weights.size(),
                      flat.begin() + static_cast<std::ptrdiff_t>(off));
            off += static_cast<std::size_t>(layer.weights.size());
        }
        select_top(flat.data(), nw, floor_count(ratio, nw), mask.bits.data());
    } else {
        for (int l = 0; l < spec.layer_count(); ++l) {
            const std::size_t n = static_cast<std::size_t>(spec.layer_weight_count(l));
            select_top(params.layers[static_cast<std::size_t>(l)].weights.data(), n,
                       floor_count(ratio, n),
                       mask.bits.data() + spec.layer_weight_offset(l));
        }
    }

    mask.selected_count = 0;
    for (std::uint8_t b : mask.bits) mask.selected_count += b;
    return mask;
}

WeightMask to_weight_mask(const ModelSpec& spec, const StegaMask& mask) {
    spec.validate();
    if (mask.bits.size() != static_cast<std::size_t>(spec.weight_count()))
        throw std::invalid_argument("to_weight_mask: bit count does not match spec");
    WeightMask wm = WeightMask::ones(spec);
    for (int l = 0; l < spec.layer_count(); ++l) {
        double* w = wm.weights[static_cast<std::size_t>(l)].data();
        const std::uint8_t* bits = mask.bits.data() + spec.layer_weight_offset(l);
        const std::size_t n = static_cast<std::size_t>(spec.layer_weight_count(l));
        for (std::size_t i = 0; i < n; ++i) w[i] = bits[i] ? 1.0 : 0.0;
    }
    return wm;
}

}  // namespace uinr
