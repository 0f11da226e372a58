#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "portrait/avatar.hpp"
#include "portrait/diffusion.hpp"
#include "portrait/model.hpp"

namespace portrait::pipeline {

using avatar::SequenceKind;
using Mixture = std::map<SequenceKind, double>;

struct StageConfig {
  std::string name;
  Mixture mixture;
  int frames = 13;
  int iterations = 0;
  double lr = 1e-4;
  std::optional<std::string> resume_from;

  void validate() const;
  nlohmann::json to_json() const;
};

/// Four-stage curriculum; iteration counts are scaled and rounded.
std::vector<StageConfig> default_schedule(double scale = 1.0);

enum class Ablation { kNone, kC1, kC2, kC3 };
std::string to_string(Ablation a);
Ablation ablation_from_string(const std::string& name);

/// C1 rewrites mixtures containing dynamic_sweep to phone 20%, studio 40%,
/// view_sweep 40%. C2 and C3 leave the schedule alone.
std::vector<StageConfig> apply_ablation(std::vector<StageConfig> schedule, Ablation a);
/// C2 drops the normal channels, C3 swaps in the landmark pathway.
model::ModelConfig apply_ablation(model::ModelConfig config, Ablation a);

/// Sequence directories of an on-disk dataset grouped by kind.
struct DatasetIndex {
  std::map<SequenceKind, std::vector<std::filesystem::path>> sequences;

  static DatasetIndex scan(const std::filesystem::path& root);
  size_t size(SequenceKind kind) const;
};

struct Draw {
  SequenceKind kind;
  size_t index;
  bool operator==(const Draw&) const = default;
};

/// I.i.d. categorical draws over kinds by ratio, then uniform within the kind.
class MixtureSampler {
 public:
  MixtureSampler(uint64_t seed, Mixture mixture, const std::map<SequenceKind, size_t>& sizes);
  Draw next();

 private:
  std::mt19937_64 rng_;
  std::vector<SequenceKind> kinds_;
  std::vector<double> cumulative_;
  std::map<SequenceKind, size_t> sizes_;
};

std::map<SequenceKind, size_t> dataset_sizes(const DatasetIndex& index);

/// Training example: a T-frame window of a stored sequence whose first frame
/// serves as the reference image.
struct Example {
  avatar::SequenceSample clip;
  model::Conditions conditions;
  Tensor latents;
};

Example make_example(const avatar::SequenceSample& clip, int spatial_factor);
Example load_example(const std::filesystem::path& dir, int frames, int spatial_factor, std::mt19937_64& rng);

struct TrainOptions {
  int batch_size = 8;
  int log_every = 50;
  uint64_t seed = 0;
  diffusion::TimestepSampling timesteps = diffusion::TimestepSampling::kUniform;
  double grad_clip = 1.0;
  nn::AdamWConfig optimizer{};
  /// Linear warmup over this many steps, then cosine decay to min_lr_ratio * lr
  /// when `cosine` is set; otherwise the stage lr is held constant after warmup.
  int warmup_steps = 0;
  bool cosine = false;
  double min_lr_ratio = 0.0;
  /// Optional fixed examples instead of drawing from datasets (overfit runs).
  const std::vector<Example>* fixed_examples = nullptr;
};

/// Learning rate at 1-based `step` of a stage with `iterations` steps.
double stage_lr(double peak, int step, int iterations, const TrainOptions& options);

struct StageResult {
  std::filesystem::path checkpoint;
  double final_loss = 0;  // mean loss of the last logging window
  int steps = 0;
};

/// Appends rows to metrics.csv (step, stage, loss, lr).
class MetricsLog {
 public:
  explicit MetricsLog(const std::filesystem::path& path);
  void append(int step, const std::string& stage, double loss, double lr);
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// Trains `model` for the stage's iterations (lr per `stage_lr`) with global-norm
/// clipping and writes `<run_dir>/ckpt_<stage>.bin` plus its manifest. If
/// `previous` is given its weights are loaded first.
StageResult run_stage(const StageConfig& stage, model::PortraitModel& model, const DatasetIndex& data,
                      const std::filesystem::path& run_dir, const std::optional<std::filesystem::path>& previous,
                      const TrainOptions& options, MetricsLog& metrics);

/// Checkpoint metadata shared by run_stage and the CLI.
nlohmann::json checkpoint_meta(const model::PortraitModel& model, const std::string& stage, int steps);
/// Loads a checkpoint after checking that it was written for the same model layout.
void load_compatible(model::PortraitModel& model, const std::filesystem::path& checkpoint);
/// Model configuration recorded in a checkpoint's manifest.
model::ModelConfig checkpoint_model_config(const std::filesystem::path& checkpoint);

struct RunManifest {
  std::vector<StageConfig> stages;
  nlohmann::json seeds = nlohmann::json::object();
  std::string git_describe;
  std::filesystem::path metrics;
  std::vector<std::filesystem::path> checkpoints;
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
  void write(const std::filesystem::path& path) const;
};

std::string git_describe();

/// Samples latents for `conditions` and decodes them to 8-bit frames.
Video animate(const model::PortraitModel& model, const model::Conditions& conditions, int steps, uint64_t seed);

}  // namespace portrait::pipeline
