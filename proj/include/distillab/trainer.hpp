#pragma once

#include <functional>
#include <optional>
#include <string>

#include "distillab/distill.hpp"
#include "distillab/scene.hpp"

namespace distillab::train {

using distill::DistillConfig;
using distill::DistillWeights;
using distill::Estimator;
using field::ParamGradient;
using field::VoxelGrid;
using prior::AnalyticPrior;
using prior::Modality;
using prior::NoiseSchedule;
using scene::SceneDataset;

struct LossWeights {
  double lambda1 = 0.1;     // unmasked depth reconstruction
  double lambda2 = 1e-4;    // masked appearance distillation
  double lambda3 = 1e-4;    // masked geometry distillation
  void validate() const;
};

struct TrainConfig {
  int iterations = 10000;
  double learning_rate = 1e-4;
  int ray_batch = 1024;
  double t_min = 0.02;
  double t_max = 0.98;
  uint64_t seed = 1;
  Estimator estimator = Estimator::Bsd;
  DistillWeights appearance{7.5, 7.5, 6.5, 0.0, distill::WtMode::Constant};
  DistillWeights geometry{7.5, 1.5, 0.5, 0.0, distill::WtMode::Constant};
  LossWeights loss;
  bool depth_supervision = true;
  int distill_resolution = 64;
  bool chain_rule_xt = true;
  render::SamplingConfig sampling;  // shared by reconstruction/distill/eval renders
  int checkpoint_every = 1000;
  int log_every = 50;

  void validate() const;
};

struct AdamState {
  std::vector<double> m_density, v_density, m_color, v_color;
  long step = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  AdamState() = default;
  explicit AdamState(const VoxelGrid& g);
  void apply(VoxelGrid& g, const ParamGradient& grad, double lr);
};

struct StepReport {
  long step = 0;
  double loss_color = 0.0;
  double loss_depth = 0.0;
  double grad_norm = 0.0;
  double grad_norm_distill_rgb = 0.0;
  double grad_norm_distill_normal = 0.0;
  double wall_ms = 0.0;
};

struct EvalReport {
  double psnr_overall = 0.0;
  double psnr_masked = 0.0;
  double psnr_unmasked = 0.0;
  double depth_rmse = 0.0;
  double normal_angle_deg = 0.0;  // mean angular error on opaque pixels
};

// Sum of squared color errors over a ray batch, with the exact parameter
// gradient via the renderer adjoint.
std::pair<double, ParamGradient> reconstruction_loss_appearance(
    const VoxelGrid& grid, const SceneDataset& ds,
    const std::vector<std::pair<int, int>>& batch,  // (view, pixel) pairs
    const render::SamplingConfig& cfg);

std::pair<double, ParamGradient> reconstruction_loss_depth(
    const VoxelGrid& grid, const SceneDataset& ds, const std::vector<std::pair<int, int>>& batch,
    const render::SamplingConfig& cfg);

// Per-view analytic priors for one modality.
struct ModalityPriors {
  std::vector<AnalyticPrior> per_view;
  NoiseSchedule schedule;
};

class Trainer {
 public:
  Trainer(VoxelGrid grid, SceneDataset dataset, TrainConfig cfg, ModalityPriors rgb_priors,
          ModalityPriors normal_priors);

  StepReport step();  // runs step index = adam_.step
  EvalReport evaluate() const;

  const VoxelGrid& grid() const { return grid_; }
  VoxelGrid& grid() { return grid_; }
  const AdamState& adam() const { return adam_; }
  long current_step() const { return adam_.step; }
  const TrainConfig& config() const { return cfg_; }

  void save_checkpoint(const std::string& path_prefix) const;
  void load_checkpoint(const std::string& path_prefix);

  // Draws the reconstruction batch for a given step (unmasked pixels only).
  std::vector<std::pair<int, int>> sample_batch(long step_index) const;

 private:
  VoxelGrid grid_;
  SceneDataset dataset_;
  TrainConfig cfg_;
  ModalityPriors rgb_priors_;
  ModalityPriors normal_priors_;
  AdamState adam_;
  std::vector<std::vector<int>> unmasked_pixels_;  // per view
};

EvalReport evaluate_grid(const VoxelGrid& grid, const SceneDataset& ds,
                         const render::SamplingConfig& cfg);

double psnr(const Image& a, const Image& b);

// Builds per-view priors from the dataset targets at the distill resolution.
enum class NegativeMode { Blur, Invert, Constant };
struct PriorBuildConfig {
  double var_pos = 0.05;
  double var_neg = 5.0;
  double pi_uncond = 0.9;
  NegativeMode negative = NegativeMode::Blur;
  int blur_radius = 6;
  Vec3 negative_constant{0.5, 0.5, 0.5};
};
ModalityPriors build_target_priors(const SceneDataset& ds, Modality modality, int resolution,
                                   const render::SamplingConfig& cfg,
                                   const PriorBuildConfig& build, const NoiseSchedule& schedule);

}  // namespace distillab::train
