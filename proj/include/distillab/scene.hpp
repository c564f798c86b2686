#pragma once

#include <string>
#include <variant>
#include <vector>

#include "distillab/renderer.hpp"

namespace distillab::scene {

using field::VoxelGrid;
using render::Camera;

struct SpherePrim {
  Vec3 center;
  double radius = 0.5;
  Vec3 color{0.5, 0.5, 0.5};
  double density = 10.0;
  bool inpaint_target = false;
};

struct BoxPrim {
  Vec3 bmin, bmax;
  Vec3 color{0.5, 0.5, 0.5};
  double density = 10.0;
  bool inpaint_target = false;
};

using Primitive = std::variant<SpherePrim, BoxPrim>;

struct SceneSpec {
  std::array<int, 3> grid_dims{64, 64, 64};
  Vec3 bbox_min{-1, -1, -1};
  Vec3 bbox_max{1, 1, 1};
  double smoothing_voxels = 1.5;  // half-width of the density falloff shell
  std::vector<Primitive> primitives;

  void validate() const;
};

// Rasterizes the primitives into raw lattices by inverting the activations.
// include_inpaint_targets=false builds the clean (evaluation) scene.
VoxelGrid build_scene(const SceneSpec& spec, bool include_inpaint_targets = true);

struct RingSpec {
  int count = 20;
  double radius = 3.2;
  double elevation_deg = 28.0;
  double fov_deg = 48.0;
  int width = 128;
  int height = 128;
};

struct MaskBox {
  Vec3 bmin, bmax;
};

// True iff the ray segment [t_near, t_far] intersects the box.
bool ray_hits_box(const render::Ray& ray, const MaskBox& box);

struct View {
  Camera camera;
  Image image;          // training image (full scene)
  Mask mask;            // 1 inside the inpainting region
  Image depth;          // training depth
  Image normal;         // training normal map, components in [-1,1]
  Image target_image;   // clean scene render (evaluation reference)
  Image target_depth;
  Image target_normal;
};

struct SceneDataset {
  int width = 0;
  int height = 0;
  std::vector<View> views;
  VoxelGrid grid_full;   // ground-truth grid with the removal target
  VoxelGrid grid_clean;  // ground-truth grid without it
  bool has_grids = false;
  bool has_targets = false;

  void validate() const;
};

SceneDataset generate_dataset(const VoxelGrid& grid_full, const VoxelGrid& grid_clean,
                              const RingSpec& ring, const MaskBox& mask_box,
                              const render::SamplingConfig& cfg);

// Directory layout:
//   images/view_%03d.pfm, masks/view_%03d.png, depth/view_%03d.pfm,
//   normals/view_%03d.pfm, poses.json, and the target/ + grids/ extras.
void save_dataset(const SceneDataset& ds, const std::string& dir);
SceneDataset load_dataset(const std::string& dir, bool require_targets = true);

std::vector<Camera> ring_cameras(const RingSpec& ring, const Vec3& center);

}  // namespace distillab::scene
