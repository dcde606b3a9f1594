// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#include "uinr/prune.hpp"

#include "uinr/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace uinr {

namespace {

std::int64_t prune_count(const ModelSpec& spec, const ParamSet& params, double q,
                         const char* who) {
    spec.validate();
    if (!params.congruent_with(spec))
        throw std::invalid_argument(std::string(who) + ": params do not match spec");
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument(std::string(who) + ": fraction outside [0, 1]");
    return static_cast<std::int64_t>(
        std::floor(q * static_cast<double>(spec.weight_count())));
}

}  // namespace

ParamSet prune_random(const ModelSpec& spec, ParamSet params, double q, std::uint64_t seed) {
    const std::int64_t k = prune_count(spec, params, q, "prune_random");
    if (k == 0) return params;

    const std::int64_t n = spec.weight_count();
    std::vector<std::int64_t> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), std::int64_t{0});

    // Partial Fisher-Yates: the first k entries are a uniform k-subset, and
    // prefixes nest across k for a fixed seed.
    Xoshiro256ss rng(seed);
    for (std::int64_t i = 0; i < k; ++i) {
        const std::int64_t j =
            i + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(n - i)));
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    for (std::int64_t i = 0; i < k; ++i)
        *params.flat_weight(spec, idx[static_cast<std::size_t>(i)]) = 0.0;
    return params;
}

ParamSet prune_magnitude(const ModelSpec& spec, ParamSet params, double q) {
    const std::int64_t k = prune_count(spec, params, q, "prune_magnitude");
    if (k == 0) return params;

    const std::int64_t n = spec.weight_count();
    std::vector<double> flat(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        flat[static_cast<std::size_t>(i)] = *params.flat_weight(spec, i);
    std::vector<std::int64_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), std::int64_t{0});
    auto cmp = [&flat](std::int64_t a, std::int64_t b) {
        const double ma = std::fabs(flat[static_cast<std::size_t>(a)]);
        const double mb = std::fabs(flat[static_cast<std::size_t>(b)]);
        if (ma != mb) return ma < mb;
        return a < b;
    };
    if (k < n)
        std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                         order.end(), cmp);
    for (std::int64_t i = 0; i < k; ++i)
        *params.flat_weight(spec, order[static_cast<std::size_t>(i)]) = 0.0;
    return params;
}

}  // namespace uinr
