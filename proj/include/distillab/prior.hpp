#pragma once

#include "distillab/image.hpp"

namespace distillab::prior {

// Continuous variance-preserving schedule:
// alpha_bar(t) = exp(-beta_min t - (beta_max - beta_min) t^2 / 2), t in [0,1].
struct NoiseSchedule {
  double beta_min = 0.1;
  double beta_max = 20.0;

  double alpha_bar(double t) const;
};

enum class ConditionKind { Positive, Negative, Unconditional };

enum class Modality { Rgb, NormalMap };

struct NoisyImage {
  Image x_t;
  double t = 0.0;
  Image eps;
};

NoisyImage add_noise(const NoiseSchedule& s, const Image& x, double t, const Image& eps);

// Anything that can predict the forward noise from a noisy image.
class Predictor {
 public:
  virtual ~Predictor() = default;
  virtual Image predict_noise(const NoiseSchedule& s, const Image& x_t, double t,
                              ConditionKind cond) const = 0;
};

// Closed-form optimal noise predictor for Gaussian conditionals
//   p0(x | c) = N(mean_c, var_c I)
// with the unconditional defined as the pi-weighted mixture of the two.
struct AnalyticPrior : Predictor {
  Modality modality = Modality::Rgb;
  Image mean_pos;
  Image mean_neg;
  double var_pos = 1.0;
  double var_neg = 1.0;
  double pi_uncond = 0.5;

  void validate() const;

  Image predict_noise(const NoiseSchedule& s, const Image& x_t, double t,
                      ConditionKind cond) const override;

  // Score of the marginal p_t(x_t | cond) and its log-density (up to exact
  // constants, which are included: score_check differentiates this).
  Image score(const NoiseSchedule& s, const Image& x_t, double t, ConditionKind cond) const;
  double log_density(const NoiseSchedule& s, const Image& x_t, double t,
                     ConditionKind cond) const;

  // Mixture responsibilities (positive component first). Defined for the
  // unconditional; degenerate conditions return {1,0} or {0,1}.
  std::array<double, 2> responsibilities(const NoiseSchedule& s, const Image& x_t,
                                         double t) const;

  // Posterior mean E[x | x_t, cond] for a Gaussian conditional.
  Image posterior_mean(const NoiseSchedule& s, const Image& x_t, double t,
                       ConditionKind cond) const;

  // Max abs deviation between the analytic score and central finite
  // differences of log_density. Self-test oracle.
  double score_check(const NoiseSchedule& s, const Image& x_t, double t, ConditionKind cond,
                     double fd_step = 1e-5, int probes = 16) const;
};

Image gaussian_image(int w, int h, int c, Rng& rng);

}  // namespace distillab::prior
