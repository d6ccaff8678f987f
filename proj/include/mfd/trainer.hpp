#pragma once

#include <string>
#include <vector>

#include "mfd/detector.hpp"

namespace mfd {

struct OptimConfig {
    double lr = 2.5e-3;
    double momentum = 0.9;
    double weight_decay = 1e-4;
    int iterations = 3000;
    int batch_size = 1;
    int warmup_iters = 0;          // linear ramp from warmup_factor*lr to lr
    double warmup_factor = 0.001;
    std::vector<int> lr_milestones;  // steps where lr is multiplied by decay
    double lr_decay_factor = 0.1;
};

struct TrainExample {
    TensorPtr image;  // (1,3,H,W) at the detector's input size
    std::vector<GtObject> gts;
};

/// SGD with momentum and decoupled weight decay over the detector's
/// parameters: v <- mu*v + g; p <- p - lr*v - lr*wd*p.
/// All stochastic choices (batch draws, target sampling) run off one RNG whose
/// state is checkpointed, so resumed runs continue the exact trajectory.
class Trainer {
public:
    Trainer(Detector& detector, const OptimConfig& cfg, std::uint64_t seed);

    double lr_at(int step) const;  // step is 0-based
    int step_count() const { return step_; }

    /// One optimizer step over the batch; losses are averaged per component
    /// before the total is formed, keeping the breakdown additive.
    LossBreakdown step(const std::vector<TrainExample>& batch);

    /// Draws batch_size indices uniformly (with replacement) from the RNG.
    std::vector<int> draw_batch(int dataset_size);

    /// Model parameters plus optimizer velocity, RNG state and step counter
    /// in one checkpoint file.
    void save(const std::string& path) const;
    void load(const std::string& path);

private:
    Detector& det_;
    OptimConfig cfg_;
    Rng rng_;
    int step_ = 0;
    std::vector<std::vector<double>> velocity_;
};

}  // namespace mfd
