#pragma once

#include <string>
#include <vector>

#include "mfd/boxes.hpp"

namespace mfd {

struct VerifyOptions {
    int grad_seeds = 10;
    int zero_offset_cases = 120;
    int oracle_instances = 1000;
    double grad_eps = 1e-5;
    double grad_tol = 1e-4;
    /// Name of a gradient check whose backward pass is deliberately broken
    /// (test seam for the failure path); empty = none.
    std::string inject_fault;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double metric = 0.0;  // worst observed value
    double limit = 0.0;   // pass threshold on the metric
    std::string note;
};

struct VerifySummary {
    std::vector<CheckResult> checks;
    bool all_pass = false;
    double seconds = 0.0;
};

/// The numerical verification battery: gradient checks for every op on the
/// training path, the zero-offset pooling equivalence, the balanced-pyramid
/// identity properties, the evaluator-vs-oracle comparison and assorted
/// structural invariants. Single-threaded by design.
VerifySummary run_verification(const VerifyOptions& opts);

/// Brute-force average precision: re-matches every score-sorted prefix from
/// scratch and integrates precision maxima directly (O(n^2) in detections).
/// Kept deliberately independent of the production evaluator.
double oracle_average_precision(const std::vector<Detection>& dets,
                                const std::vector<GroundTruth>& gts, double iou_thr);

}  // namespace mfd
