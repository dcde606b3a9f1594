// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "uinr/pipeline.hpp"

#include "uinr/metrics.hpp"
#include "uinr/network.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace uinr {

namespace {

void check_media(const MediaTensor& media, const ModelSpec& spec, const char* who) {
    if (media.shape.in_dim() != spec.in_dim || media.shape.out_dim() != spec.out_dim)
        throw std::invalid_argument(std::string(who) + ": media dims do not match spec");
}

// Trainable masks of the two phases.
ParamMask phase1_trainable(const ModelSpec& spec, const WeightMask& secret) {
    ParamMask m = ParamMask::all_trainable(spec);
    for (std::size_t l = 0; l < m.layers.size(); ++l) m.layers[l].weights = secret.weights[l];
    return m;
}

ParamMask phase2_trainable(const ModelSpec& spec, const WeightMask& secret) {
    ParamMask m = ParamMask::none_trainable(spec);
    const WeightMask cover = secret.complement();
    for (std::size_t l = 0; l < m.layers.size(); ++l) m.layers[l].weights = cover.weights[l];
    return m;
}

}  // namespace

HideResult hide(const MediaTensor& secret, const MediaTensor& cover, const ModelSpec& spec,
                const HideConfig& cfg) {
    spec.validate();
    check_media(secret, spec, "hide(secret)");
    check_media(cover, spec, "hide(cover)");

    const StegaMask mask = make_mask(spec, cfg.key, cfg.ratio, cfg.scope);
    const WeightMask wm = to_weight_mask(spec, mask);

    HideResult out;
    out.report.mask_selected = static_cast<std::int64_t>(mask.selected_count);
    out.report.degenerate = cfg.ratio == 0.0 || cfg.ratio == 1.0;

    ParamSet params = init_params(spec, cfg.key);

    FitResult phase1 = fit(spec, std::move(params), secret.coords, secret.values,
                           cfg.secret_train, phase1_trainable(spec, wm), &wm);
    out.report.secret_loss = phase1.final_loss;
    out.report.secret_reconstruction = forward(spec, phase1.params, secret.coords, &wm);
    out.report.secret_psnr_db = psnr_values(out.report.secret_reconstruction, secret.values);

    FitResult phase2 = fit(spec, std::move(phase1.params), cover.coords, cover.values,
                           cfg.cover_train, phase2_trainable(spec, wm), nullptr);
    out.report.cover_loss = phase2.final_loss;
    out.report.stega_psnr_db =
        psnr_values(forward(spec, phase2.params, cover.coords, nullptr), cover.values);

    out.model.spec = spec;
    out.model.params = std::move(phase2.params);
    return out;
}

Mat render_values(const StegaModel& model, const Mat& coords) {
    return forward(model.spec, model.params, coords, nullptr);
}

MediaTensor render(const StegaModel& model, const MediaShape& shape, std::uint32_t sample_rate) {
    if (shape.in_dim() != model.spec.in_dim || shape.out_dim() != model.spec.out_dim)
        throw std::invalid_argument("render: shape does not match model dims");
    return media_from_values(shape, render_values(model, grid_for(shape)), sample_rate);
}

Mat reveal_values(const StegaModel& model, StegaKey key, double ratio, MaskScope scope,
                  const Mat& coords) {
    const WeightMask wm = to_weight_mask(model.spec, make_mask(model.spec, key, ratio, scope));
    return forward(model.spec, model.params, coords, &wm);
}

MediaTensor reveal(const StegaModel& model, StegaKey key, double ratio, MaskScope scope,
                   const MediaShape& shape, std::uint32_t sample_rate) {
    if (shape.in_dim() != model.spec.in_dim || shape.out_dim() != model.spec.out_dim)
        throw std::invalid_argument("reveal: shape does not match model dims");
    return media_from_values(shape, reveal_values(model, key, ratio, scope, grid_for(shape)),
                             sample_rate);
}

StegaModel fit_plain(const MediaTensor& media, const ModelSpec& spec, StegaKey key,
                     const TrainConfig& cfg, double* final_loss) {
    spec.validate();
    check_media(media, spec, "fit_plain");
    FitResult r = fit(spec, init_params(spec, key), media.coords, media.values, cfg,
                      ParamMask::all_trainable(spec), nullptr);
    if (final_loss) *final_loss = r.final_loss;
    return {spec, std::move(r.params)};
}

}  // namespace uinr
