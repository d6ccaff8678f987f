#pragma once

#include <map>
#include <stdexcept>

#include "mfd/tensor.hpp"

namespace mfd {

/// Ordered multi-level feature maps (level index -> tensor) with per-level
/// strides. All levels share one channel count; spatial extents shrink as the
/// level index grows.
struct FeaturePyramid {
    std::map<int, TensorPtr> levels;
    std::map<int, int> strides;

    int channels() const {
        if (levels.empty()) throw std::invalid_argument("feature pyramid is empty");
        return levels.begin()->second->shape.c;
    }
};

/// Integrated map at the reference level's resolution.
struct BalancedMap {
    TensorPtr b_mix;
    int reference_level = 4;
};

}  // namespace mfd
