// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "uinr/analysis.hpp"
#include "uinr/consensus.hpp"
#include "uinr/media.hpp"
#include "uinr/metrics.hpp"
#include "uinr/model.hpp"
#include "uinr/pipeline.hpp"
#include "uinr/prune.hpp"
#include "uinr/serialize.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace uinr;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void report(const std::string& key, const std::string& value) {
    std::printf("%s=%s\n", key.c_str(), value.c_str());
}

void report(const std::string& key, double value) { report(key, fmt(value)); }

// --key flag wins; UINR_KEY is the fallback so keys can stay out of shell
// history.
StegaKey resolve_key(const std::optional<std::uint64_t>& flag) {
    if (flag) return StegaKey{*flag};
    const char* env = std::getenv("UINR_KEY");
    if (!env || !*env) throw UsageError("missing --key (or UINR_KEY)");
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0')
        throw UsageError("UINR_KEY is not a valid unsigned integer");
    return StegaKey{static_cast<std::uint64_t>(v)};
}

Modality modality_for(const std::string& path, const std::string& override_name) {
    if (!override_name.empty()) {
        if (override_name == "image") return Modality::Image;
        if (override_name == "audio") return Modality::Audio;
        if (override_name == "video") return Modality::Video;
        throw UsageError("unknown --modality: " + override_name);
    }
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".png") == 0) return Modality::Image;
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".wav") == 0) return Modality::Audio;
    return Modality::Video;  // frame directory
}

MediaTensor load_media(const std::string& path, const std::string& modality) {
    switch (modality_for(path, modality)) {
        case Modality::Image: return load_image(path);
        case Modality::Audio: return load_audio(path);
        case Modality::Video: return load_video(path);
    }
    throw UsageError("unreachable modality");
}

void save_media(const MediaTensor& tensor, const std::string& path) {
    switch (tensor.shape.modality) {
        case Modality::Image: save_image(tensor, path); return;
        case Modality::Audio: save_audio(tensor, path); return;
        case Modality::Video: save_video(tensor, path); return;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

int to_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size() || v < 1) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("bad ") + what + ": '" + s + "'");
    }
}

double to_double(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("bad ") + what + ": '" + s + "'");
    }
}

// "IN-HIDDEN-OUT" where HIDDEN is either WIDTHxCOUNT or a comma list,
// e.g. 2-256x4-3 or 2-64,64,32-3.
void parse_arch(const std::string& s, ModelSpec& spec) {
    const auto parts = split(s, '-');
    if (parts.size() != 3) throw UsageError("bad --arch: '" + s + "' (want IN-HIDDEN-OUT)");
    spec.in_dim = to_int(parts[0], "--arch input dim");
    spec.out_dim = to_int(parts[2], "--arch output dim");
    spec.hidden_widths.clear();
    const std::string& hidden = parts[1];
    if (hidden.find('x') != std::string::npos) {
        const auto wh = split(hidden, 'x');
        if (wh.size() != 2) throw UsageError("bad --arch hidden spec: '" + hidden + "'");
        const int width = to_int(wh[0], "--arch hidden width");
        const int count = to_int(wh[1], "--arch hidden count");
        spec.hidden_widths.assign(static_cast<std::size_t>(count), width);
    } else {
        for (const auto& tok : split(hidden, ','))
            spec.hidden_widths.push_back(to_int(tok, "--arch hidden width"));
    }
}

// Image HxWxC, audio T, video FxHxWxC; dims must fit the modality.
MediaShape parse_shape(const std::string& s, Modality modality) {
    const auto parts = split(s, 'x');
    std::vector<std::int64_t> dims;
    for (const auto& tok : parts) dims.push_back(to_int(tok, "--shape dim"));
    switch (modality) {
        case Modality::Image:
            if (dims.size() != 3) throw UsageError("image --shape must be HxWxC");
            return MediaShape::image(dims[0], dims[1], dims[2]);
        case Modality::Audio:
            if (dims.size() != 1) throw UsageError("audio --shape must be T");
            return MediaShape::audio(dims[0]);
        case Modality::Video:
            if (dims.size() != 4) throw UsageError("video --shape must be FxHxWxC");
            return MediaShape::video(dims[0], dims[1], dims[2], dims[3]);
    }
    throw UsageError("unreachable modality");
}

MaskScope parse_scope(const std::string& s) {
    if (s == "global") return MaskScope::Global;
    if (s == "per-layer" || s == "per_layer") return MaskScope::PerLayer;
    throw UsageError("unknown --scope: " + s);
}

// Paper-derived defaults: four hidden layers of 256 for images and video,
// three of 256 for audio; omega0 30, except 3000 on the audio first layer.
ModelSpec default_spec(const MediaTensor& media) {
    ModelSpec spec;
    spec.in_dim = media.shape.in_dim();
    spec.out_dim = media.shape.out_dim();
    const bool audio = media.shape.modality == Modality::Audio;
    spec.hidden_widths.assign(audio ? 3 : 4, 256);
    spec.omega0_first = audio ? 3000.0 : 30.0;
    spec.omega0_hidden = 30.0;
    return spec;
}

ModelSpec build_spec(const MediaTensor& media, const std::string& arch, double omega0_first,
                     double omega0_hidden) {
    ModelSpec spec = default_spec(media);
    if (!arch.empty()) parse_arch(arch, spec);
    if (omega0_first > 0.0) spec.omega0_first = omega0_first;
    if (omega0_hidden > 0.0) spec.omega0_hidden = omega0_hidden;
    spec.validate();
    if (spec.in_dim != media.shape.in_dim() || spec.out_dim != media.shape.out_dim())
        throw UsageError("--arch dims do not match the media");
    return spec;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error(path + ": cannot open for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error(path + ": write failed");
}

struct CommonFitArgs {
    std::optional<std::uint64_t> key;
    std::string arch;
    std::int64_t steps = 2000;
    double lr = 1e-4;
    std::int64_t batch = 0;
    double omega0_first = 0.0;
    double omega0_hidden = 0.0;
    std::string modality;
};

void add_fit_flags(CLI::App* cmd, CommonFitArgs& args) {
    cmd->add_option("--key", args.key, "Shared 64-bit key (fallback: UINR_KEY)");
    cmd->add_option("--arch", args.arch, "Architecture IN-HIDDEN-OUT, e.g. 2-256x4-3");
    cmd->add_option("--steps", args.steps, "Training steps")->check(CLI::NonNegativeNumber);
    cmd->add_option("--lr", args.lr, "Learning rate")->check(CLI::PositiveNumber);
    cmd->add_option("--batch", args.batch, "Minibatch size (0 = automatic)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--omega0", args.omega0_first, "First-layer frequency");
    cmd->add_option("--omega0-hidden", args.omega0_hidden, "Hidden-layer frequency");
    cmd->add_option("--modality", args.modality, "Override: image|audio|video");
}

TrainConfig train_config(const CommonFitArgs& args, std::int64_t steps) {
    TrainConfig cfg;
    cfg.learning_rate = args.lr;
    cfg.steps = steps;
    cfg.batch = args.batch;
    return cfg;
}

void print_quality(const MediaTensor& got, const MediaTensor& want) {
    if (want.shape.modality == Modality::Audio) {
        const AudioMseReport r = audio_mse_stats(got, want);
        report("mse_mean", r.mse_mean);
        report("mse_std", r.mse_std);
    } else {
        report("psnr", psnr(got, want));
    }
}

int run_fit(const CommonFitArgs& args, const std::string& media_path, const std::string& out) {
    const StegaKey key = resolve_key(args.key);
    const MediaTensor media = load_media(media_path, args.modality);
    const ModelSpec spec = build_spec(media, args.arch, args.omega0_first, args.omega0_hidden);

    double final_loss = 0.0;
    const StegaModel model = fit_plain(media, spec, key, train_config(args, args.steps),
                                       &final_loss);
    save_model(out, model.spec, model.params);
    report("steps", fmt(static_cast<double>(args.steps)));
    report("final_loss", final_loss);
    print_quality(media_from_values(media.shape, render_values(model, media.coords),
                                    media.sample_rate),
                  media);
    report("out", out);
    return 0;
}

int run_hide(const CommonFitArgs& args, const std::string& secret_path,
             const std::string& cover_path, double ratio, const std::string& scope,
             std::int64_t steps_cover, const std::string& out) {
    HideConfig cfg;
    cfg.key = resolve_key(args.key);
    cfg.ratio = ratio;
    cfg.scope = parse_scope(scope);
    cfg.secret_train = train_config(args, args.steps);
    cfg.cover_train = train_config(args, steps_cover > 0 ? steps_cover : args.steps);

    const MediaTensor secret = load_media(secret_path, args.modality);
    const MediaTensor cover = load_media(cover_path, args.modality);
    const ModelSpec spec = build_spec(cover, args.arch, args.omega0_first, args.omega0_hidden);

    const HideResult res = hide(secret, cover, spec, cfg);
    save_model(out, res.model.spec, res.model.params);
    report("mask_selected", fmt(static_cast<double>(res.report.mask_selected)));
    report("degenerate", res.report.degenerate ? "1" : "0");
    report("secret_loss", res.report.secret_loss);
    report("cover_loss", res.report.cover_loss);
    report("secret_psnr_db", res.report.secret_psnr_db);
    report("stega_psnr_db", res.report.stega_psnr_db);
    report("out", out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Implicit-representation steganography toolkit"};
    app.require_subcommand(1);

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "Fit a plain INR to one media item");
    CommonFitArgs fit_args;
    std::string fit_media, fit_out;
    add_fit_flags(fit_cmd, fit_args);
    fit_cmd->add_option("--media", fit_media, "Input media")->required();
    fit_cmd->add_option("--out", fit_out, "Output model file")->required();

    // hide
    auto* hide_cmd = app.add_subcommand("hide", "Embed a secret item inside a cover fit");
    CommonFitArgs hide_args;
    std::string hide_secret, hide_cover, hide_out, hide_scope = "global";
    double hide_ratio = 0.3;
    std::int64_t hide_steps_cover = 0;
    add_fit_flags(hide_cmd, hide_args);
    hide_cmd->add_option("--secret", hide_secret, "Secret media")->required();
    hide_cmd->add_option("--cover", hide_cover, "Cover media")->required();
    hide_cmd->add_option("--ratio", hide_ratio, "Stega ratio in (0,1)")->required();
    hide_cmd->add_option("--scope", hide_scope, "Mask scope: global|per-layer");
    hide_cmd->add_option("--steps-cover", hide_steps_cover,
                         "Cover phase steps (default: --steps)");
    hide_cmd->add_option("--out", hide_out, "Output model file")->required();

    // reveal
    auto* reveal_cmd = app.add_subcommand("reveal", "Extract the secret with the key");
    std::string reveal_model, reveal_shape, reveal_out, reveal_scope = "global";
    std::string reveal_modality;
    std::optional<std::uint64_t> reveal_key;
    double reveal_ratio = 0.3;
    std::uint32_t reveal_rate = 8000;
    reveal_cmd->add_option("--model", reveal_model, "Model file")->required();
    reveal_cmd->add_option("--key", reveal_key, "Shared 64-bit key (fallback: UINR_KEY)");
    reveal_cmd->add_option("--ratio", reveal_ratio, "Stega ratio used at hide time")->required();
    reveal_cmd->add_option("--scope", reveal_scope, "Mask scope: global|per-layer");
    reveal_cmd->add_option("--shape", reveal_shape, "Output shape (HxWxC, T, FxHxWxC)")
        ->required();
    reveal_cmd->add_option("--modality", reveal_modality, "Override: image|audio|video");
    reveal_cmd->add_option("--rate", reveal_rate, "Sample rate for audio output");
    reveal_cmd->add_option("--out", reveal_out, "Output media path")->required();

    // render
    auto* render_cmd = app.add_subcommand("render", "Standard keyless inference");
    std::string render_model, render_shape, render_out, render_modality;
    std::uint32_t render_rate = 8000;
    render_cmd->add_option("--model", render_model, "Model file")->required();
    render_cmd->add_option("--shape", render_shape, "Output shape (HxWxC, T, FxHxWxC)")
        ->required();
    render_cmd->add_option("--modality", render_modality, "Override: image|audio|video");
    render_cmd->add_option("--rate", render_rate, "Sample rate for audio output");
    render_cmd->add_option("--out", render_out, "Output media path")->required();

    // metrics
    auto* metrics_cmd = app.add_subcommand("metrics", "Compare two media items");
    std::string metrics_a, metrics_b, metrics_modality;
    metrics_cmd->add_option("--a", metrics_a, "First media")->required();
    metrics_cmd->add_option("--b", metrics_b, "Second media")->required();
    metrics_cmd->add_option("--modality", metrics_modality, "Override: image|audio|video");

    // attack
    auto* attack_cmd = app.add_subcommand("attack", "Prune a model file");
    std::string attack_model, attack_out, attack_strategy;
    double attack_fraction = 0.0;
    std::uint64_t attack_seed = 0;
    attack_cmd->add_option("--model", attack_model, "Model file")->required();
    attack_cmd->add_option("--strategy", attack_strategy, "random|magnitude")->required();
    attack_cmd->add_option("--fraction", attack_fraction, "Fraction of weights to zero")
        ->required();
    attack_cmd->add_option("--seed", attack_seed, "Seed for random pruning");
    attack_cmd->add_option("--out", attack_out, "Output model file")->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Hide across several ratios, emit CSV");
    CommonFitArgs sweep_args;
    std::string sweep_secret, sweep_cover, sweep_out, sweep_scope = "global";
    std::string sweep_ratios;
    std::int64_t sweep_steps_cover = 0;
    add_fit_flags(sweep_cmd, sweep_args);
    sweep_cmd->add_option("--secret", sweep_secret, "Secret media")->required();
    sweep_cmd->add_option("--cover", sweep_cover, "Cover media")->required();
    sweep_cmd->add_option("--ratios", sweep_ratios, "Comma list of ratios in (0,1)")->required();
    sweep_cmd->add_option("--scope", sweep_scope, "Mask scope: global|per-layer");
    sweep_cmd->add_option("--steps-cover", sweep_steps_cover,
                          "Cover phase steps (default: --steps)");
    sweep_cmd->add_option("--out", sweep_out, "Output CSV path")->required();

    // hist
    auto* hist_cmd = app.add_subcommand("hist", "Weight-value histogram CSV");
    std::string hist_model, hist_out, hist_scope = "global";
    std::optional<std::uint64_t> hist_key;
    double hist_ratio = -1.0;
    hist_cmd->add_option("--model", hist_model, "Model file")->required();
    hist_cmd->add_option("--key", hist_key, "Split by mask of this key");
    hist_cmd->add_option("--ratio", hist_ratio, "Mask ratio for the split");
    hist_cmd->add_option("--scope", hist_scope, "Mask scope: global|per-layer");
    hist_cmd->add_option("--out", hist_out, "Output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fit_cmd->parsed()) return run_fit(fit_args, fit_media, fit_out);

        if (hide_cmd->parsed())
            return run_hide(hide_args, hide_secret, hide_cover, hide_ratio, hide_scope,
                            hide_steps_cover, hide_out);

        if (reveal_cmd->parsed()) {
            const StegaKey key = resolve_key(reveal_key);
            auto [spec, params] = load_model(reveal_model);
            const StegaModel model{std::move(spec), std::move(params)};
            const MediaShape shape =
                parse_shape(reveal_shape, modality_for(reveal_out, reveal_modality));
            const MaskScope scope = parse_scope(reveal_scope);
            save_media(reveal(model, key, reveal_ratio, scope, shape, reveal_rate), reveal_out);
            report("note", "recovered quality is not verifiable without ground truth");
            report("out", reveal_out);
            return 0;
        }

        if (render_cmd->parsed()) {
            auto [spec, params] = load_model(render_model);
            const StegaModel model{std::move(spec), std::move(params)};
            const MediaShape shape =
                parse_shape(render_shape, modality_for(render_out, render_modality));
            save_media(render(model, shape, render_rate), render_out);
            report("out", render_out);
            return 0;
        }

        if (metrics_cmd->parsed()) {
            const MediaTensor a = load_media(metrics_a, metrics_modality);
            const MediaTensor b = load_media(metrics_b, metrics_modality);
            if (a.shape.modality == Modality::Audio) {
                const AudioMseReport r = audio_mse_stats(a, b);
                report("mse_mean", r.mse_mean);
                report("mse_std", r.mse_std);
            } else {
                const MetricReport r = image_metrics(a, b);
                report("psnr", r.psnr_db);
                report("ssim", r.ssim);
                report("apd", r.apd);
                report("rmse", r.rmse);
            }
            return 0;
        }

        if (attack_cmd->parsed()) {
            auto [spec, params] = load_model(attack_model);
            ParamSet pruned;
            if (attack_strategy == "random")
                pruned = prune_random(spec, std::move(params), attack_fraction, attack_seed);
            else if (attack_strategy == "magnitude")
                pruned = prune_magnitude(spec, std::move(params), attack_fraction);
            else
                throw UsageError("unknown --strategy: " + attack_strategy);
            save_model(attack_out, spec, pruned);
            report("strategy", attack_strategy);
            report("fraction", attack_fraction);
            report("zeroed", fmt(std::floor(attack_fraction *
                                            static_cast<double>(spec.weight_count()))));
            report("out", attack_out);
            return 0;
        }

        if (sweep_cmd->parsed()) {
            HideConfig base;
            base.key = resolve_key(sweep_args.key);
            base.scope = parse_scope(sweep_scope);
            base.secret_train = train_config(sweep_args, sweep_args.steps);
            base.cover_train = train_config(
                sweep_args, sweep_steps_cover > 0 ? sweep_steps_cover : sweep_args.steps);
            std::vector<double> ratios;
            for (const auto& tok : split(sweep_ratios, ','))
                ratios.push_back(to_double(tok, "--ratios entry"));
            const MediaTensor secret = load_media(sweep_secret, sweep_args.modality);
            const MediaTensor cover = load_media(sweep_cover, sweep_args.modality);
            const ModelSpec spec = build_spec(cover, sweep_args.arch, sweep_args.omega0_first,
                                              sweep_args.omega0_hidden);
            const auto rows = ratio_sweep(secret, cover, spec, base, ratios);
            write_text(sweep_out, sweep_csv(rows));
            report("rows", fmt(static_cast<double>(rows.size())));
            report("out", sweep_out);
            return 0;
        }

        if (hist_cmd->parsed()) {
            auto [spec, params] = load_model(hist_model);
            WeightHistogram hist;
            if (hist_key || hist_ratio >= 0.0) {
                if (!hist_key || hist_ratio < 0.0)
                    throw UsageError("histogram split needs both --key and --ratio");
                const StegaMask mask =
                    make_mask(spec, StegaKey{*hist_key}, hist_ratio, parse_scope(hist_scope));
                hist = weight_histogram(spec, params, &mask);
            } else {
                hist = weight_histogram(spec, params);
            }
            write_text(hist_out, histogram_csv(hist));
            report("bins", fmt(static_cast<double>(hist.total.size())));
            report("out", hist_out);
            return 0;
        }
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
