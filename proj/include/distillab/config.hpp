#pragma once

#include <string>

#include "distillab/trainer.hpp"

#include <nlohmann/json_fwd.hpp>

namespace distillab::config {

struct DatasetConfig {
  std::string path;  // where the dataset lives (or is written by genscene)
  scene::RingSpec ring;
  scene::MaskBox mask_box{{0, 0, 0}, {0, 0, 0}};
  bool has_mask_box = false;
};

struct PriorConfig {
  std::string positive_mean = "target";  // "target" | "constant" | file path
  std::string negative_mean = "blur";    // "blur" | "invert" | "constant" | file path
  Vec3 positive_constant{0.5, 0.5, 0.5};
  Vec3 negative_constant{0.5, 0.5, 0.5};
  double var_pos = 0.05;
  double var_neg = 5.0;
  double pi_uncond = 0.9;
  int blur_radius = 6;
};

struct BenchConfig {
  std::vector<double> omega3_values{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  std::vector<uint64_t> seeds{1, 2, 3};
  int variance_samples = 10000;
  int variance_resolution = 32;
  double variance_var_pos = 100.0;
  double variance_var_neg = 100.0;
  double variance_pi = 0.5;
  std::vector<std::string> estimators{"sds", "csd", "bsd"};
  int sweep_iterations = 400;
  int compare_iterations = 600;
  bool smoke = false;  // tiny settings for harness tests
};

struct ExperimentConfig {
  uint64_t seed = 1;
  scene::SceneSpec scene;
  bool has_scene = false;
  DatasetConfig dataset;
  render::SamplingConfig sampling;
  PriorConfig prior_rgb;
  PriorConfig prior_normal;
  train::TrainConfig train;
  BenchConfig bench;
  bool dump_delta = false;

  void validate() const;
};

// Parses, validates (types, ranges, unknown keys rejected with field-path
// diagnostics), and fills defaults. The returned config round-trips through
// resolved_json().
ExperimentConfig parse_experiment(const nlohmann::json& j);
ExperimentConfig load_experiment(const std::string& path);

nlohmann::json resolved_json(const ExperimentConfig& c);

// Applies a dotted-path override, e.g. set_path(j, "train.iterations", "200").
void set_json_path(nlohmann::json& j, const std::string& dotted, const std::string& json_value);

// JSON schema for the experiment document, generated from the same key table
// the validator uses.
nlohmann::json experiment_schema();

distill::Estimator estimator_from_string(const std::string& s);
std::string estimator_to_string(distill::Estimator e);

}  // namespace distillab::config
