#pragma once

#include "mfd/params.hpp"
#include "mfd/pyramid.hpp"

namespace mfd {

/// Balanced feature pyramid: averages every level at the reference level's
/// resolution, refines the mix with an embedded dot-product non-local block,
/// and adds the refinement back onto each level.
class BalancedFeaturePyramid {
public:
    /// Registers the 1x1 projection parameters under "bfp." names. theta/phi/g
    /// run at half channel width with small uniform init; the restoring
    /// projection starts at zero so the whole block starts as the identity.
    BalancedFeaturePyramid(int channels, int reference_level, ParamStore& store, Rng& rng);

    /// Mean of all levels resized to the reference resolution: bilinear
    /// upsampling for coarser levels, adaptive max-pooling for finer ones.
    BalancedMap integrate(const FeaturePyramid& pyramid) const;

    /// Non-local refinement of the integrated map.
    TensorPtr refine_nonlocal(const BalancedMap& mix) const;

    /// Adds y (resized per level) onto every level; shapes are preserved.
    FeaturePyramid rescatter(const FeaturePyramid& pyramid, const TensorPtr& y) const;

    /// integrate -> refine -> rescatter.
    FeaturePyramid apply(const FeaturePyramid& pyramid) const;

    int reference_level() const { return reference_level_; }

private:
    int channels_;
    int reference_level_;
    TensorPtr theta_w_, theta_b_, phi_w_, phi_b_, g_w_, g_b_, out_w_, out_b_;
};

/// Resizes to an exact spatial target: bilinear when growing, adaptive
/// max-pool when shrinking, pass-through when equal.
TensorPtr resize_to(const TensorPtr& t, int out_h, int out_w);

}  // namespace mfd
