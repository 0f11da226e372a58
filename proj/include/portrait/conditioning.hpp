#pragma once

#include <string>
#include <vector>

#include "portrait/autograd.hpp"
#include "portrait/avatar.hpp"
#include "portrait/camera.hpp"
#include "portrait/nn.hpp"
#include "portrait/tensor.hpp"

namespace portrait::conditioning {

using nn::Matrix;
using nn::Var;

/// Pre-norm residual self-attention block over one token sequence.
struct AttentionBlock {
  nn::Linear q, k, v, out;
  int heads = 1;

  AttentionBlock() = default;
  AttentionBlock(nn::ParameterStore& store, const std::string& name, int width, int heads, nn::Rng& rng);
  Var operator()(const Var& x, const std::vector<int>& segments = {}) const;
};

struct ControllerConfig {
  int expression_dim = avatar::kExpressionDim;
  int width = 64;  // C
  int heads = 4;
  int blocks = 2;
};

/// Lifts per-frame expression codes to C features: linear lift, sinusoidal
/// temporal positions, then full-sequence self-attention blocks.
class ExpressionController {
 public:
  ExpressionController() = default;
  ExpressionController(nn::ParameterStore& store, const std::string& name, const ControllerConfig& config,
                       nn::Rng& rng);

  /// codes: T×d_e -> T×C.
  Var encode(const Matrix& codes) const;
  /// Several tracks stacked row-wise; attention stays within each track.
  Var encode_batch(const std::vector<Matrix>& tracks) const;
  const ControllerConfig& config() const { return config_; }
  const std::vector<AttentionBlock>& blocks() const { return blocks_; }

 private:
  Var encode_rows(const Matrix& codes, const std::vector<int>& positions, const std::vector<int>& segments) const;

  ControllerConfig config_;
  nn::Linear lift_;
  std::vector<AttentionBlock> blocks_;
};

/// Rows of the T×C feature matrix that form each l×4C chunk, in order.
std::vector<int> chunk_rows(int frames);

/// T×C -> l×4C. Chunk 0 repeats frame 0 four times; chunk j >= 1 holds
/// frames 4j-3..4j.
Var chunk_expression(const Var& features);

/// Sinusoid of t·1000 through a two-layer MLP.
class TimestepEmbedder {
 public:
  TimestepEmbedder() = default;
  TimestepEmbedder(nn::ParameterStore& store, const std::string& name, int frequency_dim, int dim, nn::Rng& rng);
  Var operator()(double t) const;
  int dim() const { return fc2_.out_features(); }

 private:
  int frequency_dim_ = 0;
  nn::Linear fc1_, fc2_;
};

struct TimestepEmbeddings {
  Var base;       // 1×D
  Var per_frame;  // (l+1)×D, row 0 is the reference slot
};

/// base = embedder(t); per_frame[0] = base, per_frame[i+1] = base + projection(chunk_i).
TimestepEmbeddings frame_timestep_embeddings(double t, const Var& chunked, const TimestepEmbedder& embedder,
                                             const nn::Linear& projection);

struct FusionOptions {
  bool include_normals = true;
  /// Extra channel group carrying z_I on slot 0 and zeros on video slots.
  bool ref_channel_group = false;
};

/// Channel layout of a fused stack: [latent c | normal c | ray 6 | ref c].
struct ChannelLayout {
  int latent = 0;
  int normal = 0;
  int ray = 6;
  int ref = 0;

  static ChannelLayout make(int latent_channels, const FusionOptions& options);
  int total() const { return latent + normal + ray + ref; }
  int normal_offset() const { return latent; }
  int ray_offset() const { return latent + normal; }
  int ref_offset() const { return latent + normal + ray; }
};

/// (l+1)×h×w×C_in stack; slot 0 is the reference slot.
struct ConditionBundle {
  Tensor stack;
  ChannelLayout layout;

  int slots() const { return static_cast<int>(stack.dim(0)); }
  int height() const { return static_cast<int>(stack.dim(1)); }
  int width() const { return static_cast<int>(stack.dim(2)); }
  int channels() const { return static_cast<int>(stack.dim(3)); }
};

/// ref_latent 1×h×w×c, noisy and normal latents l×h×w×c, ray_maps l×h×w×6.
/// `identity_rays` is the h×w×6 ray map of the identity camera.
ConditionBundle fuse_conditions(const Tensor& ref_latent, const Tensor& noisy_latents, const Tensor& normal_latents,
                                const Tensor& ray_maps, const camera::RayMap& identity_rays,
                                const FusionOptions& options = {});

/// Replaces the latent-stream channels of video slots (1..l) in place.
void set_noisy_latents(ConditionBundle& bundle, const Tensor& noisy_latents);

/// Per-slot ray maps: slot j uses the camera of the last frame it covers
/// (frame 0 for slot 0, frame 4j otherwise), relative to `reference`.
Tensor slot_ray_maps(const camera::Trajectory& trajectory, const camera::CameraPose& reference, int h, int w);

/// T×K×3 landmarks (u, v, valid) flattened to (T·K)×3, row t*K + k.
struct LandmarkTrack {
  int frames = 0;
  int points = 0;
  Matrix data;

  double u(int t, int k) const { return data(t * points + k, 0); }
  double v(int t, int k) const { return data(t * points + k, 1); }
  bool valid(int t, int k) const { return data(t * points + k, 2) > 0.5; }
  nlohmann::json to_json() const;
};

/// Projects the avatar fiducials of each frame through that frame's camera.
/// Points behind the camera or outside the image are flagged invalid.
LandmarkTrack landmark_track(const avatar::SequenceSample& sample,
                             const std::vector<avatar::Fiducial>& fiducials = avatar::default_landmark_set());

struct LandmarkEncoderConfig {
  int points = 8;  // K
  int width = 64;  // C
  int heads = 4;
};

/// Alternating spatial (within a frame) and temporal (within a point track)
/// attention, two of each, then mean over points to T×C.
class LandmarkEncoder {
 public:
  LandmarkEncoder() = default;
  LandmarkEncoder(nn::ParameterStore& store, const std::string& name, const LandmarkEncoderConfig& config,
                  nn::Rng& rng);
  /// Coordinates are normalized by the image size before the lift.
  Var encode(const LandmarkTrack& track, int image_width, int image_height) const;

 private:
  LandmarkEncoderConfig config_;
  nn::Linear lift_;
  Var point_embedding_;  // K×C
  std::vector<AttentionBlock> blocks_;
};

}  // namespace portrait::conditioning
