#pragma once

#include <string>
#include <vector>

#include "mfd/detector.hpp"
#include "mfd/synth.hpp"
#include "mfd/trainer.hpp"

namespace mfd {

/// Everything one run needs, loadable from a JSON file with dotted-path
/// overrides (--set model.roi_k=5). Defaults mirror the standard two-stage
/// settings; the shipped configs/toy.json scales them down.
struct RunConfig {
    std::uint64_t seed = 17;
    std::string out_dir = "runs/out";

    std::string dataset_root;        // manifest corpus dir or VOC annotation dir
    double train_fraction = 0.8;     // used for plain VOC dirs

    SynthConfig synth;
    DetectorConfig model;            // num_classes is filled from the dataset
    OptimConfig optim;

    std::string log_file = "train_log.jsonl";
    std::string checkpoint_file = "checkpoint.mfdn";
    int checkpoint_every = 0;        // extra periodic checkpoints; 0 = final only

    std::string eval_checkpoint;     // defaults to <out_dir>/<checkpoint_file>
    std::string eval_detections_in;  // report-only mode when set

    std::string preset;              // baseline | fom | bfp | both
};

/// Loads the file (optional), applies "key.path=value" overrides, then the
/// ablation preset (FOM/BFP toggles), in that order.
RunConfig load_run_config(const std::string& path, const std::vector<std::string>& overrides);

std::string run_config_to_json(const RunConfig& cfg);

}  // namespace mfd
