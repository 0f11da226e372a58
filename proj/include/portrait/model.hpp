#pragma once

#include <nlohmann/json.hpp>

#include "portrait/avatar.hpp"
#include "portrait/codec.hpp"
#include "portrait/conditioning.hpp"
#include "portrait/dit.hpp"
#include "portrait/nn.hpp"

namespace portrait::model {

using nn::Matrix;
using nn::Var;

enum class ExpressionSource { kCodes, kLandmarks };

struct ModelConfig {
  int spatial_factor = 4;
  dit::DiTConfig dit{};
  conditioning::ControllerConfig controller{};
  conditioning::LandmarkEncoderConfig landmarks{};
  int timestep_frequency_dim = 64;
  conditioning::FusionOptions fusion{};
  ExpressionSource expression_source = ExpressionSource::kCodes;
  uint64_t init_seed = 0;

  /// Fills the channel counts the backbone sees.
  void finalize();
  nlohmann::json to_json() const;
  static ModelConfig from_json(const nlohmann::json& j);
};

/// Everything the denoiser sees apart from the noisy latents.
struct Conditions {
  int frames = 0;
  int image_height = 0;
  int image_width = 0;
  Tensor ref_latent;      // 1×h×w×c
  Tensor normal_latents;  // l×h×w×c
  Tensor ray_maps;        // l×h×w×6
  camera::RayMap identity_rays;
  Matrix expression;  // T×d_e
  conditioning::LandmarkTrack landmarks;
};

/// Conditions for animating `reference_image` (seen from `reference_camera`)
/// with the normals, expressions and cameras of `driving`.
Conditions make_conditions(const avatar::SequenceSample& driving, const Image& reference_image,
                           const camera::CameraPose& reference_camera, int spatial_factor);

class PortraitModel {
 public:
  explicit PortraitModel(const ModelConfig& config);
  PortraitModel(const PortraitModel&) = delete;
  PortraitModel& operator=(const PortraitModel&) = delete;

  /// l×4C expression (or landmark) chunks; independent of t and z.
  Var expression_chunks(const Conditions& c) const;
  conditioning::TimestepEmbeddings embeddings(double t, const Var& chunks) const;
  conditioning::ConditionBundle bundle(const Tensor& noisy, const Conditions& c) const;
  /// Velocity for the video slots as (l·h·w)×c.
  Var predict(const Tensor& noisy, double t, const Conditions& c, const Var& chunks) const;
  Var predict(const Tensor& noisy, double t, const Conditions& c) const;

  nn::ParameterStore& parameters() { return store_; }
  const nn::ParameterStore& parameters() const { return store_; }
  const ModelConfig& config() const { return config_; }
  dit::DiT& backbone() { return dit_; }
  const conditioning::ExpressionController& controller() const { return controller_; }

 private:
  ModelConfig config_;
  nn::ParameterStore store_;
  conditioning::ExpressionController controller_;
  conditioning::LandmarkEncoder landmark_encoder_;
  conditioning::TimestepEmbedder timestep_;
  nn::Linear projection_;
  dit::DiT dit_;
};

/// (l·h·w)×c matrix view of an l×h×w×c tensor and back.
Matrix as_matrix(const Tensor& t);
Tensor as_tensor(const Matrix& m, const std::vector<int64_t>& shape);

}  // namespace portrait::model
