// Copyright 2026 The uinr Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include "uinr/model.hpp"

#include <cstdint>

namespace uinr {

// Zeroes exactly floor(q * N_w) weights chosen uniformly by the seeded
// stream; biases untouched. The same seed selects a nested set as q grows.
ParamSet prune_random(const ModelSpec& spec, ParamSet params, double q, std::uint64_t seed);

// Zeroes the floor(q * N_w) smallest-magnitude weights (lower flat index
// breaks magnitude ties); biases untouched.
ParamSet prune_magnitude(const ModelSpec& spec, ParamSet params, double q);

}  // namespace uinr
