#pragma once

#include <vector>

#include "mfd/boxes.hpp"
#include "mfd/params.hpp"
#include "mfd/tensor.hpp"

namespace mfd {

/// Region of interest in feature-map pixel coordinates.
struct RoI {
    Box box;
    int batch_index = 0;

    double width() const { return box.width(); }
    double height() const { return box.height(); }
};

/// Per-bin offsets for one RoI: normalized values straight from the offset
/// predictor and their feature-pixel scaling.
struct OffsetGrid {
    int k = 0;
    double alpha = 0.0;
    double roi_width = 0.0, roi_height = 0.0;
    std::vector<double> normalized;  // 2*k*k, x plane then y plane
    std::vector<double> scaled;      // alpha * normalized * (w, h)
};

/// Average-pooled RoI features: each of the k*k bins averages a 2x2 bilinear
/// sub-grid. Output is (num_rois, C, k, k); differentiable w.r.t. the feature
/// map.
TensorPtr roi_pool(const TensorPtr& feature, const std::vector<RoI>& rois, int k);

/// ΔC = alpha * ΔĈ * (w, h), per RoI. Offsets are (R,2,k,k) with channel 0
/// holding x offsets and channel 1 y offsets; differentiable w.r.t. ΔĈ.
TensorPtr scale_offsets(const TensorPtr& normalized, const std::vector<RoI>& rois, double alpha);

/// roi_pool with each bin's sample grid translated by that bin's ΔC.
/// Samples falling outside the feature map read zero. Differentiable w.r.t.
/// both the feature map and the offsets.
TensorPtr deformable_roi_pool(const TensorPtr& feature, const std::vector<RoI>& rois,
                              const TensorPtr& offsets, int k);

/// Element-wise sum of the plain and offset-pooled features.
TensorPtr merge_features(const TensorPtr& f, const TensorPtr& f_c);

enum class MergeMode { kSum, kConcatProject };

/// Feature offset module for the classification branch: predicts normalized
/// per-bin offsets from the pooled features, extracts offset features with
/// deformable pooling and merges them with the original pooling.
class FeatureOffsetModule {
public:
    FeatureOffsetModule(int channels, int k, double alpha, MergeMode merge, ParamStore& store,
                        Rng& rng);

    /// FC over flattened F; output (R,2,k,k). Zero-initialized, so offsets
    /// start at zero and the module starts as plain pooling.
    TensorPtr predict_offsets(const TensorPtr& pooled) const;

    struct Result {
        TensorPtr merged;       // classification-branch features
        TensorPtr offset_feat;  // F_c, input of the auxiliary head
    };
    Result extract(const TensorPtr& feature, const std::vector<RoI>& rois) const;
    /// Same, reusing an already pooled (R,C,k,k) feature block.
    Result extract(const TensorPtr& feature, const std::vector<RoI>& rois,
                   const TensorPtr& pooled) const;

    /// Diagnostic view of one RoI's offsets (Eq. 3 structure for tests).
    OffsetGrid offset_grid(const TensorPtr& normalized, const RoI& roi, int roi_index) const;

    int k() const { return k_; }
    double alpha() const { return alpha_; }

private:
    int channels_;
    int k_;
    double alpha_;
    MergeMode merge_;
    TensorPtr offset_w_, offset_b_;
    TensorPtr merge_w_, merge_b_;  // only in concat-project mode
};

}  // namespace mfd
