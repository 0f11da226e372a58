#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "portrait/avatar.hpp"
#include "portrait/model.hpp"
#include "portrait/pipeline.hpp"

namespace portrait::config {

/// Everything a reproducible run needs. Loaded from JSON; any key absent from
/// the defaults is rejected, missing keys keep their defaults.
struct RunConfig {
  uint64_t seed = 0;
  avatar::DatasetConfig data;
  model::ModelConfig model;
  double schedule_scale = 1.0;
  /// Optional per-stage overrides of the clip length and iteration count.
  std::vector<int> stage_frames;
  std::vector<int> stage_iterations;
  pipeline::TrainOptions train;
  pipeline::Ablation ablation = pipeline::Ablation::kNone;
  int sample_steps = 25;
  std::filesystem::path data_dir = "data";
  std::filesystem::path run_dir = "runs";

  RunConfig();

  /// Schedule after scaling, overrides and the ablation.
  std::vector<pipeline::StageConfig> schedule() const;
  /// Model configuration after the ablation.
  model::ModelConfig model_config() const;

  nlohmann::json to_json() const;
  /// Relative paths are resolved against `base`.
  static RunConfig from_json(const nlohmann::json& j, const std::filesystem::path& base = ".");
  static RunConfig load(const std::filesystem::path& path);
};

/// Recursively overlays `patch` onto `defaults`; throws kSchema naming the first
/// key of `patch` that `defaults` lacks or whose type differs.
nlohmann::json merge_strict(const nlohmann::json& defaults, const nlohmann::json& patch, const std::string& where = "");

/// Reads and parses a JSON file (kIo / kSchema on failure).
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace portrait::config
