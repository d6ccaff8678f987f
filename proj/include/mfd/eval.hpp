#pragma once

#include <map>
#include <string>
#include <vector>

#include "mfd/boxes.hpp"

namespace mfd {

struct ClassEval {
    int gt_count = 0;
    // AP per IoU threshold, keyed by the threshold value; absent for classes
    // with zero ground truth (excluded from the aggregates).
    std::map<double, double> ap;
};

struct EvalReport {
    std::map<int, ClassEval> per_class;
    double map50 = 0.0;   // mean AP at IoU 0.5
    double ap25 = 0.0;    // mean AP at IoU 0.25
    double ap75 = 0.0;    // mean AP at IoU 0.75
    std::string to_json(const std::map<int, std::string>& class_names = {}) const;
};

/// Average precision for one class: detections sorted by descending score
/// (ties by insertion order), greedily matched to the highest-IoU unmatched
/// ground truth in the same image with IoU >= iou_thr, one match per gt; AP is
/// the area under the all-point precision envelope over recall.
double average_precision(const std::vector<Detection>& dets, const std::vector<GroundTruth>& gts,
                         double iou_thr);

/// AP per class at IoU thresholds {0.25, 0.5, 0.75} plus the aggregates.
/// Classes without ground truth are excluded from every mean. Throws if there
/// is no ground truth at all.
EvalReport map_suite(const std::vector<Detection>& dets, const std::vector<GroundTruth>& gts);

// detection dump format: one JSON object per line with
// {image_id, class_id, box:[x1,y1,x2,y2], score}
std::string detections_to_jsonl(const std::vector<Detection>& dets);
std::vector<Detection> detections_from_jsonl(const std::string& text);

}  // namespace mfd
