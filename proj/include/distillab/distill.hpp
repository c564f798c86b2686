#pragma once

#include "distillab/prior.hpp"
#include "distillab/renderer.hpp"

namespace distillab::distill {

using field::ParamGradient;
using field::VoxelGrid;
using prior::AnalyticPrior;
using prior::Modality;
using prior::NoiseSchedule;
using prior::Predictor;

enum class Estimator { Sds, CfgSds, Csd, CsdW3, Bsd };

enum class WtMode { Constant, OneMinusAlphaBar };

struct DistillWeights {
  double omega = 7.5;   // CFG guidance weight
  double omega1 = 7.5;  // positive-condition coefficient
  double omega2 = 6.5;  // negative-condition coefficient
  double omega3 = 0.0;  // unconditional coefficient of the generalized form
  WtMode w_t_mode = WtMode::Constant;
};

double w_of_t(const NoiseSchedule& s, double t, WtMode mode);

// epsilon-hat^omega(x_t) - eps with the CFG-blended predictor
// (1+omega) eps(y) - omega eps(uncond); omega = 0 collapses to the plain
// conditional predictor.
Image sds_delta(const Predictor& prior, const NoiseSchedule& s, const Image& x, double t,
                const Image& eps, const DistillWeights& w);

struct DeltaDecomposition {
  Image gen;  // eps(y) - eps
  Image cls;  // eps(y) - eps(uncond)
};

DeltaDecomposition cfg_decompose(const Predictor& prior, const NoiseSchedule& s, const Image& x,
                                 double t, const Image& eps, double omega);

// omega1 eps(y) + omega3 eps(uncond) - omega2 eps(y_neg)
Image csd_w3_delta(const Predictor& prior, const NoiseSchedule& s, const Image& x, double t,
                   const Image& eps, const DistillWeights& w);

// omega1 eps(y) - omega2 eps(y_neg); exactly two predictor evaluations.
Image bsd_delta(const Predictor& prior, const NoiseSchedule& s, const Image& x, double t,
                const Image& eps, const DistillWeights& w);

// Dispatch by estimator. Sds forces omega=0; Csd maps to the generalized form
// with omega3 = omega2 - omega1.
Image estimator_delta(Estimator e, const Predictor& prior, const NoiseSchedule& s, const Image& x,
                      double t, const Image& eps, const DistillWeights& w);

struct DistillConfig {
  int resolution = 64;
  render::SamplingConfig sampling;
  double t_min = 0.02;
  double t_max = 0.98;
  bool chain_rule_xt = true;  // multiply by d x_t / d x = sqrt(alpha_bar)
};

struct DistillDiag {
  double t = 0.0;
  double weight = 0.0;  // w(t) * sqrt(alpha_bar) as applied
  Image delta;          // masked delta actually pushed through the adjoint
  Image rendered;
};

// One stochastic distillation gradient: renders the modality image from
// `camera` at the distillation resolution, draws (t, eps) from rng, evaluates
// the estimator delta, masks it, applies w(t) and the x_t chain factor, and
// runs the renderer adjoint back to the grid parameters.
ParamGradient distill_param_grad(const VoxelGrid& grid, const render::Camera& camera,
                                 Modality modality, Estimator estimator,
                                 const DistillWeights& weights, const Mask& mask,
                                 const Predictor& prior, const NoiseSchedule& schedule,
                                 const DistillConfig& cfg, Rng& rng,
                                 DistillDiag* diag = nullptr);

}  // namespace distillab::distill
