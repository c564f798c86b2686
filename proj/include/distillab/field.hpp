#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "distillab/core.hpp"

namespace distillab::field {

// Raw color is clamped to this band before the sigmoid so derivatives stay finite.
inline constexpr double kRawColorClamp = 30.0;
inline constexpr double kRawDensityFloor = -20.0;

// Trainable voxel radiance field. Lattices hold pre-activation values in
// x-fastest order; density activates through softplus, color through sigmoid.
struct VoxelGrid {
  std::array<int, 3> dims{0, 0, 0};  // node counts per axis, >= 2 each
  Vec3 bbox_min, bbox_max;
  std::vector<double> raw_density;  // dims[0]*dims[1]*dims[2]
  std::vector<double> raw_color;    // 3 * node count, rgb interleaved

  VoxelGrid() = default;
  VoxelGrid(std::array<int, 3> dims, Vec3 bmin, Vec3 bmax, double raw_density_init = 0.0,
            double raw_color_init = 0.0);

  std::size_t node_count() const {
    return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
  }
  std::size_t node_index(int ix, int iy, int iz) const {
    return static_cast<std::size_t>(ix) + static_cast<std::size_t>(dims[0]) *
                                              (static_cast<std::size_t>(iy) +
                                               static_cast<std::size_t>(dims[1]) * iz);
  }
  Vec3 node_position(int ix, int iy, int iz) const;
  Vec3 voxel_size() const;  // edge lengths of one cell
  double min_voxel_edge() const;
  bool contains(const Vec3& p) const;
};

// Gradient accumulator shaped like a VoxelGrid's raw lattices.
struct ParamGradient {
  std::vector<double> d_raw_density;
  std::vector<double> d_raw_color;

  ParamGradient() = default;
  explicit ParamGradient(const VoxelGrid& g)
      : d_raw_density(g.raw_density.size(), 0.0), d_raw_color(g.raw_color.size(), 0.0) {}

  void add(const ParamGradient& o);
  void scale(double s);
  void axpy(double s, const ParamGradient& o);  // this += s * o
  double squared_norm() const;
  bool all_finite() const;
  void clear();
};

double sample_density(const VoxelGrid& grid, const Vec3& p);
Vec3 sample_color(const VoxelGrid& grid, const Vec3& p);

// Central differences of the activated density along the world axes.
Vec3 density_gradient(const VoxelGrid& grid, const Vec3& p, double h);

// n = -g / sqrt(|g|^2 + eps^2); zero where the density gradient vanishes.
Vec3 normal(const VoxelGrid& grid, const Vec3& p, double h, double eps);

// Upstream sensitivities for one sample point.
struct FieldUpstream {
  double d_sigma = 0.0;
  Vec3 d_color{};
  Vec3 d_grad{};  // w.r.t. density_gradient output
};

// Exact VJP of the sampling operations, accumulated into `out`.
void field_vjp(const VoxelGrid& grid, const Vec3& p, double h, const FieldUpstream& up,
               ParamGradient& out);

// Individual adjoints (field_vjp is their sum).
void density_sample_vjp(const VoxelGrid& grid, const Vec3& p, double d_sigma, ParamGradient& out);
void color_sample_vjp(const VoxelGrid& grid, const Vec3& p, const Vec3& d_color,
                      ParamGradient& out);
void density_gradient_vjp(const VoxelGrid& grid, const Vec3& p, double h, const Vec3& d_grad,
                          ParamGradient& out);
// Chains d(normal) through the regularized normalization into the stencil.
void normal_vjp(const VoxelGrid& grid, const Vec3& p, double h, double eps, const Vec3& d_normal,
                ParamGradient& out);

}  // namespace distillab::field
