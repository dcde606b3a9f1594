// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "uinr/analysis.hpp"
#include "uinr/prune.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace uinr;

namespace {

// N_w = 4*10 + 10*6 = 100 makes cardinalities easy to read off.
ModelSpec hundred_spec() {
    ModelSpec spec;
    spec.in_dim = 4;
    spec.out_dim = 6;
    spec.hidden_widths = {10};
    return spec;
}

std::vector<std::int64_t> zeroed_indices(const ModelSpec& spec, const ParamSet& before,
                                         const ParamSet& after) {
    std::vector<std::int64_t> idx;
    for (std::int64_t i = 0; i < spec.weight_count(); ++i) {
        const double was = *before.flat_weight(spec, i);
        const double now = *after.flat_weight(spec, i);
        if (was != 0.0 && now == 0.0) idx.push_back(i);
    }
    return idx;
}

ModelSpec row_spec(int in) {
    ModelSpec spec;
    spec.in_dim = in;
    spec.out_dim = 1;
    spec.hidden_widths = {};
    return spec;
}

}  // namespace

TEST_CASE("prune_random zeroes exactly the floored count") {
    const ModelSpec spec = hundred_spec();
    const ParamSet p = init_params(spec, StegaKey{1});

    const ParamSet q0 = prune_random(spec, p, 0.0, 7);
    CHECK(testing::bits_equal(q0, p));

    const ParamSet q1 = prune_random(spec, p, 1.0, 7);
    CHECK(zeroed_indices(spec, p, q1).size() == 100);
    for (std::size_t l = 0; l < p.layers.size(); ++l)
        CHECK(testing::bits_equal(q1.layers[l].biases, p.layers[l].biases));

    for (double q : {0.01, 0.05, 0.149, 0.32, 0.999}) {
        const ParamSet pr = prune_random(spec, p, q, 7);
        const auto want = static_cast<std::size_t>(std::floor(q * 100.0));
        CHECK(zeroed_indices(spec, p, pr).size() == want);
    }
}

TEST_CASE("prune_random is seeded and nested in q") {
    const ModelSpec spec = hundred_spec();
    const ParamSet p = init_params(spec, StegaKey{2});

    const ParamSet a = prune_random(spec, p, 0.25, 11);
    const ParamSet b = prune_random(spec, p, 0.25, 11);
    CHECK(testing::bits_equal(a, b));

    const ParamSet c = prune_random(spec, p, 0.25, 12);
    CHECK_FALSE(testing::bits_equal(a, c));

    const auto small = zeroed_indices(spec, p, prune_random(spec, p, 0.1, 11));
    const auto large = zeroed_indices(spec, p, prune_random(spec, p, 0.5, 11));
    for (const auto i : small)
        CHECK(std::find(large.begin(), large.end(), i) != large.end());
}

TEST_CASE("prune_magnitude removes the smallest weights first") {
    const ModelSpec spec = row_spec(3);
    ParamSet p = ParamSet::zeros(spec);
    p.layers[0].weights << 0.5, -0.01, 0.2;

    const ParamSet pruned = prune_magnitude(spec, p, 1.0 / 3.0);
    CHECK(pruned.layers[0].weights(0, 0) == 0.5);
    CHECK(pruned.layers[0].weights(0, 1) == 0.0);
    CHECK(pruned.layers[0].weights(0, 2) == 0.2);
}

TEST_CASE("prune_magnitude breaks magnitude ties by lower index") {
    const ModelSpec spec = row_spec(3);
    ParamSet p = ParamSet::zeros(spec);
    p.layers[0].weights << 0.2, -0.2, 0.1;

    const ParamSet pruned = prune_magnitude(spec, p, 2.0 / 3.0);
    CHECK(pruned.layers[0].weights(0, 0) == 0.0);
    CHECK(pruned.layers[0].weights(0, 1) == -0.2);
    CHECK(pruned.layers[0].weights(0, 2) == 0.0);
}

TEST_CASE("prune rejects fractions outside the unit interval") {
    const ModelSpec spec = row_spec(2);
    const ParamSet p = ParamSet::zeros(spec);
    CHECK_THROWS_AS(prune_random(spec, p, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(prune_random(spec, p, 1.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(prune_magnitude(spec, p, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(prune_magnitude(spec, p, 1.1), std::invalid_argument);
}

TEST_CASE("weight histogram bins and outliers") {
    const ModelSpec spec = row_spec(6);
    ParamSet p = ParamSet::zeros(spec);
    // One underflow, one overflow, zero, the hi edge, and two interior values.
    p.layers[0].weights << -0.5, 0.5, 0.0, 0.1, -0.0999, 0.04;

    const WeightHistogram h = weight_histogram(spec, p);
    REQUIRE(h.total.size() == 43);
    CHECK_FALSE(h.split);
    CHECK(h.total.front() == 1);  // -0.5
    CHECK(h.total.back() == 2);   // 0.5 and the w >= hi edge at 0.1
    CHECK(h.total[21] == 1);      // 0.0 sits in the middle bin

    std::int64_t sum = 0;
    for (const auto c : h.total) sum += c;
    CHECK(sum == spec.weight_count());
}

TEST_CASE("split histogram partitions every bin") {
    ModelSpec spec;
    spec.in_dim = 2;
    spec.out_dim = 3;
    spec.hidden_widths = {12};
    const StegaKey key{33};
    const ParamSet p = init_params(spec, key);
    const StegaMask mask = make_mask(spec, key, 0.4, MaskScope::Global);

    const WeightHistogram h = weight_histogram(spec, p, &mask);
    REQUIRE(h.split);
    REQUIRE(h.secret.size() == h.total.size());
    REQUIRE(h.cover.size() == h.total.size());

    std::int64_t secret_sum = 0;
    for (std::size_t i = 0; i < h.total.size(); ++i) {
        CHECK(h.secret[i] + h.cover[i] == h.total[i]);
        secret_sum += h.secret[i];
    }
    CHECK(secret_sum == static_cast<std::int64_t>(mask.selected_count));
}

TEST_CASE("histogram csv layout") {
    const ModelSpec spec = row_spec(2);
    ParamSet p = ParamSet::zeros(spec);
    p.layers[0].weights << -1.0, 0.0;

    const std::string csv = histogram_csv(weight_histogram(spec, p));
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "bin_lo,bin_hi,total");
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("-inf,", 0) == 0);
    int rows = 1;
    std::string last = line;
    while (std::getline(in, line)) {
        ++rows;
        last = line;
    }
    CHECK(rows == 43);
    CHECK(last.find(",inf,") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);

    const StegaMask mask = make_mask(spec, StegaKey{1}, 0.5, MaskScope::Global);
    const std::string split_csv = histogram_csv(weight_histogram(spec, p, &mask));
    CHECK(split_csv.rfind("bin_lo,bin_hi,total,secret,cover\n", 0) == 0);
}

TEST_CASE("ratio_sweep reproduces standalone hides") {
    const MediaTensor secret = testing::make_test_image(10, 10, 1, 301);
    const MediaTensor cover = testing::make_test_image(10, 10, 1, 302);
    ModelSpec spec;
    spec.in_dim = 2;
    spec.out_dim = 1;
    spec.hidden_widths = {24};

    HideConfig base;
    base.key = StegaKey{909};
    base.scope = MaskScope::Global;
    base.secret_train.steps = 40;
    base.cover_train.steps = 40;

    const auto rows = ratio_sweep(secret, cover, spec, base, {0.25});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].ratio == 0.25);

    HideConfig alone = base;
    alone.ratio = 0.25;
    const HideResult r = hide(secret, cover, spec, alone);
    CHECK(rows[0].stega_psnr_db == r.report.stega_psnr_db);
    CHECK(rows[0].secret_psnr_db == r.report.secret_psnr_db);
}

TEST_CASE("ratio_sweep rejects edge ratios and handles an empty list") {
    const MediaTensor secret = testing::make_test_image(8, 8, 1, 303);
    const MediaTensor cover = testing::make_test_image(8, 8, 1, 304);
    ModelSpec spec;
    spec.in_dim = 2;
    spec.out_dim = 1;
    spec.hidden_widths = {8};
    HideConfig base;
    base.key = StegaKey{1};
    base.secret_train.steps = 1;
    base.cover_train.steps = 1;

    CHECK_THROWS_AS(ratio_sweep(secret, cover, spec, base, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ratio_sweep(secret, cover, spec, base, {1.0}), std::invalid_argument);
    CHECK(ratio_sweep(secret, cover, spec, base, {}).empty());
}

TEST_CASE("sweep csv layout") {
    std::vector<SweepRow> rows;
    rows.push_back({0.1, 31.25, 18.5});
    rows.push_back({0.5, 27.0, 24.125});
    const std::string csv = sweep_csv(rows);
    CHECK(csv == "ratio,stega_psnr_db,secret_psnr_db\n0.1,31.25,18.5\n0.5,27,24.125\n");

    CHECK(sweep_csv({}) == "ratio,stega_psnr_db,secret_psnr_db\n");
}
