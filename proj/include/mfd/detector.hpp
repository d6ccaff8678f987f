#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mfd/anchors.hpp"
#include "mfd/bfp.hpp"
#include "mfd/fom.hpp"
#include "mfd/params.hpp"
#include "mfd/pyramid.hpp"

namespace mfd {

struct DetectorConfig {
    int num_classes = 5;  // foreground classes; logits carry one extra background column
    int input_width = 800;
    int input_height = 600;

    std::vector<int> backbone_channels{16, 32, 64, 128};
    int fpn_channels = 64;

    std::vector<double> anchor_scales{8.0};
    std::vector<double> anchor_ratios{0.5, 1.0, 2.0};

    // proposal generation
    int rpn_pre_nms_per_level = 1000;
    double rpn_nms_threshold = 0.7;
    int rpn_post_nms_train = 2000;
    int rpn_post_nms_test = 1000;
    double rpn_min_box_size = 1.0;

    // anchor assignment / sampling
    double rpn_pos_iou = 0.7;
    double rpn_neg_iou = 0.3;
    double rpn_fallback_iou = 0.3;  // each gt claims its best anchor above this
    int rpn_sample_count = 256;
    double rpn_pos_fraction = 0.5;

    // second-stage assignment / sampling
    double roi_pos_iou = 0.5;
    double roi_neg_iou = 0.5;
    int roi_sample_count = 512;
    double roi_pos_fraction = 0.25;

    // heads
    int head_hidden = 256;
    int roi_k = 7;
    double offset_alpha = 0.1;
    bool fom_enabled = true;
    bool bfp_enabled = true;
    double fom_loss_weight = 1.0;
    std::string fom_merge = "sum";  // or "concat"
    int reference_level = 4;
    double finest_scale = 56.0;  // RoI-to-level area heuristic

    std::array<double, 4> head_delta_stds{0.1, 0.1, 0.2, 0.2};
    std::array<double, 4> rpn_delta_stds{1.0, 1.0, 1.0, 1.0};
    double rpn_smooth_l1_beta = 1.0 / 9.0;
    double head_smooth_l1_beta = 1.0;

    // inference
    double score_threshold = 0.05;
    double nms_threshold = 0.5;
    int max_detections = 100;
};

struct Proposal {
    Box box;  // input-image coordinates, clipped
    double score = 0.0;
    int batch_index = 0;
};

struct DetectorOutput {
    TensorPtr class_logits;  // (R, M+1)
    TensorPtr box_deltas;    // (R, 4)
    TensorPtr fom_logits;    // (R, M+1); null when FOM is disabled
};

struct LossBreakdown {
    double l_rpn = 0, l_cls = 0, l_loc = 0, l_fom = 0, total = 0;
};

struct GtObject {
    Box box;  // input-image coordinates
    int class_id = 0;
};

struct RpnForward {
    std::vector<int> levels;
    std::vector<TensorPtr> objectness;  // (N, A, Hl, Wl) per level
    std::vector<TensorPtr> deltas;      // (N, 4A, Hl, Wl) per level
};

struct RoiTargets {
    std::vector<int> sampled;       // indices into the proposal list
    std::vector<int> labels;        // 0 = background, 1..M foreground
    std::vector<int> positive_pos;  // positions of positives within sampled
    std::vector<double> delta_targets;  // 4 per positive, sampled order
};

/// Two-stage detector: tiny strided backbone, FPN fusion, optional balanced
/// feature pyramid, RPN proposals and decoupled classification (with the
/// feature offset module) and regression heads.
class Detector {
public:
    Detector(const DetectorConfig& cfg, std::uint64_t seed);

    const DetectorConfig& config() const { return cfg_; }
    ParamStore& params() { return params_; }
    const ParamStore& params() const { return params_; }

    /// Backbone + FPN (+ BFP when enabled); levels 2..5 at strides 4/8/16/32.
    FeaturePyramid extract_features(const TensorPtr& image) const;
    /// Backbone + FPN only.
    FeaturePyramid backbone_fpn(const TensorPtr& image) const;

    RpnForward rpn_forward(const FeaturePyramid& pyramid) const;
    std::vector<Anchor> pyramid_anchors(const FeaturePyramid& pyramid) const;

    /// Decoded, clipped, filtered, per-level top-k + NMS + global top-n
    /// proposals for one batch image. Scores are objectness sigmoids.
    std::vector<Proposal> propose(const RpnForward& rpn, const std::vector<Anchor>& anchors,
                                  int batch_index, bool training) const;

    /// Second-stage assignment at IoU 0.5 with 25%-positive sampling.
    RoiTargets assign_targets(const std::vector<Proposal>& proposals,
                              const std::vector<GtObject>& gts, Rng& rng) const;

    DetectorOutput forward_heads(const FeaturePyramid& pyramid,
                                 const std::vector<Proposal>& proposals) const;

    struct LossResult {
        TensorPtr l_rpn, l_cls, l_loc, l_fom;
        TensorPtr total;  // l_rpn + l_cls + l_loc + l_fom, in that order
        LossBreakdown breakdown;
    };
    /// Full training loss for one image: total = l_rpn + l_cls + l_loc + l_fom.
    LossResult compute_loss(const TensorPtr& image, const std::vector<GtObject>& gts,
                            Rng& rng) const;

    /// Detections in input-image coordinates, sorted by descending score.
    std::vector<Detection> infer(const TensorPtr& image, int image_id = 0) const;

    /// Objectness BCE plus anchor-delta smooth-L1 over a 256-anchor sample.
    TensorPtr rpn_loss(const RpnForward& rpn, const std::vector<Anchor>& anchors,
                       const std::vector<GtObject>& gts, Rng& rng, double* value) const;

private:
    struct HeadBranch {
        TensorPtr fc1_w, fc1_b, fc2_w, fc2_b;
    };
    TensorPtr head_branch(const HeadBranch& branch, const TensorPtr& features) const;
    int level_for_roi(const Box& box) const;

    DetectorConfig cfg_;
    ParamStore params_;

    // backbone
    std::vector<TensorPtr> stage_conv_w_, stage_conv_b_, stage_scale_, stage_shift_;
    // fpn
    std::vector<TensorPtr> lateral_w_, lateral_b_, fpn_conv_w_, fpn_conv_b_;
    // rpn
    TensorPtr rpn_conv_w_, rpn_conv_b_, rpn_obj_w_, rpn_obj_b_, rpn_delta_w_, rpn_delta_b_;
    // heads
    HeadBranch cls_head_, reg_head_, fom_head_;

    std::unique_ptr<BalancedFeaturePyramid> bfp_;
    std::unique_ptr<FeatureOffsetModule> fom_;
};

}  // namespace mfd
