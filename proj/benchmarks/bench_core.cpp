// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "uinr/consensus.hpp"
#include "uinr/media.hpp"
#include "uinr/network.hpp"
#include "uinr/trainer.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace uinr;

ModelSpec image_spec() {
    ModelSpec spec;
    spec.in_dim = 2;
    spec.out_dim = 3;
    spec.hidden_widths = {256, 256, 256, 256};
    return spec;
}

Mat grid_coords(int side) {
    MediaShape shape = MediaShape::image(side, side, 3);
    return grid_for(shape);
}

void BM_InitParams(benchmark::State& state) {
    const ModelSpec spec = image_spec();
    for (auto _ : state) {
        ParamSet p = init_params(spec, StegaKey{42});
        benchmark::DoNotOptimize(p.layers.front().weights(0, 0));
    }
}
BENCHMARK(BM_InitParams);

void BM_MakeMaskGlobal(benchmark::State& state) {
    const ModelSpec spec = image_spec();
    for (auto _ : state) {
        StegaMask m = make_mask(spec, StegaKey{42}, 0.3, MaskScope::Global);
        benchmark::DoNotOptimize(m.selected_count);
    }
}
BENCHMARK(BM_MakeMaskGlobal);

void BM_Forward1024(benchmark::State& state) {
    const ModelSpec spec = image_spec();
    const ParamSet p = init_params(spec, StegaKey{42});
    const Mat coords = grid_coords(32);
    for (auto _ : state) {
        Mat out = forward(spec, p, coords);
        benchmark::DoNotOptimize(out(0, 0));
    }
}
BENCHMARK(BM_Forward1024);

void BM_Backward1024(benchmark::State& state) {
    const ModelSpec spec = image_spec();
    const ParamSet p = init_params(spec, StegaKey{42});
    const Mat coords = grid_coords(32);
    const Mat targets = Mat::Zero(coords.rows(), spec.out_dim);
    for (auto _ : state) {
        Gradients g = backward(spec, p, coords, targets);
        benchmark::DoNotOptimize(g.layers.front().weights(0, 0));
    }
}
BENCHMARK(BM_Backward1024);

void BM_AdamStep(benchmark::State& state) {
    const ModelSpec spec = image_spec();
    ParamSet p = init_params(spec, StegaKey{42});
    const Mat coords = grid_coords(32);
    const Mat targets = Mat::Zero(coords.rows(), spec.out_dim);
    const Gradients g = backward(spec, p, coords, targets);
    AdamState st = AdamState::init(spec);
    TrainConfig cfg;
    const ParamMask trainable = ParamMask::all_trainable(spec);
    for (auto _ : state) {
        adam_step(p, g, st, cfg, trainable);
        benchmark::DoNotOptimize(p.layers.front().weights(0, 0));
    }
}
BENCHMARK(BM_AdamStep);

}  // namespace

BENCHMARK_MAIN();
