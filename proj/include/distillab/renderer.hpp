#pragma once

#include <optional>
#include <span>
#include <vector>

#include "distillab/field.hpp"
#include "distillab/image.hpp"

namespace distillab::render {

using field::ParamGradient;
using field::VoxelGrid;

// Pinhole camera; camera-to-world rotation columns are the camera axes
// (x right, y down, z forward in image convention), pixel (u,v) maps to
// direction ((u-cx)/fx, (v-cy)/fy, 1) in the camera frame.
struct Camera {
  std::array<double, 9> rotation{1, 0, 0, 0, 1, 0, 0, 0, 1};  // row-major cam-to-world
  Vec3 translation{};
  double fx = 1.0, fy = 1.0, cx = 0.0, cy = 0.0;
  int width = 1, height = 1;

  Vec3 axis(int col) const { return {rotation[col], rotation[3 + col], rotation[6 + col]}; }
  Vec3 forward() const { return axis(2); }
  double orthonormality_error() const;  // ||R^T R - I||_F
  void validate() const;
};

Camera look_at(const Vec3& eye, const Vec3& target, const Vec3& up, double fov_y_deg, int width,
               int height);
// Rescales intrinsics to a new resolution, preserving pixel centers.
Camera resize_camera(const Camera& cam, int new_w, int new_h);

struct Ray {
  Vec3 origin;
  Vec3 dir;  // unit length
  double t_near = 0.0;
  double t_far = 1.0;
};

struct SamplingConfig {
  int n_samples = 64;  // >= 2
  bool stratified = false;
  uint64_t rng_seed = 0;
  double t_near = 0.1;
  double t_far = 6.0;
  double normal_step = 0.0;  // world units; <= 0 means one voxel edge
  double normal_eps = 1e-6;
  bool depth_over_opacity = false;  // divide depth by opacity (off: plain weighted sum)

  void validate() const;
  double resolve_normal_step(const VoxelGrid& g) const;
};

// Which output channels a render should produce. Opacity is always computed.
struct RenderChannels {
  bool color = true;
  bool depth = true;
  bool normal = false;
};

// One retained sample of a ray march; enough state to run the adjoint
// without touching the RNG again.
struct RenderSegment {
  double t = 0.0;
  double delta = 0.0;
  double sigma = 0.0;
  double transmittance = 1.0;
  Vec3 color{};
  Vec3 normal{};
  bool inside = false;
};

struct RenderOutput {
  Image color;    // H x W x 3 in [0,1]
  Image depth;    // H x W, world units
  Image opacity;  // H x W in [0,1]
  Image normal;   // H x W x 3 in [-1,1]
};

// Per-ray outputs plus retained segments for the adjoint.
struct RayRenderResult {
  std::vector<Ray> rays;
  SamplingConfig cfg;
  RenderChannels channels;
  std::vector<Vec3> color;
  std::vector<double> depth;
  std::vector<double> opacity;
  std::vector<Vec3> normal;
  std::vector<std::vector<RenderSegment>> segments;  // empty when not retained
};

std::vector<Ray> make_rays(const Camera& cam, double t_near, double t_far);
Ray make_ray(const Camera& cam, double u, double v, double t_near, double t_far);

// Full-image render (forward only; no segments retained).
RenderOutput render_image(const VoxelGrid& grid, const Camera& cam, const SamplingConfig& cfg,
                          const RenderChannels& channels = {true, true, true});

// Ray-batch render. retain=true keeps segments for render_vjp.
RayRenderResult render_rays(const VoxelGrid& grid, std::span<const Ray> rays,
                            const SamplingConfig& cfg, const RenderChannels& channels,
                            bool retain);

struct RenderUpstream {
  std::vector<Vec3> d_color;    // per ray; empty means zero
  std::vector<double> d_depth;
  std::vector<double> d_opacity;
  std::vector<Vec3> d_normal;
};

// Exact reverse-mode pass through compositing, normal renormalization and the
// field adjoints. Requires the retained segments of the forward pass.
ParamGradient render_vjp(const VoxelGrid& grid, const RayRenderResult& fwd,
                         const RenderUpstream& upstream);

// Normal maps feed priors as (n+1)/2 images in [0,1].
Image encode_normal(const Image& n);

}  // namespace distillab::render
