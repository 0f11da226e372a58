#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "portrait/camera.hpp"
#include "portrait/raster.hpp"
#include "portrait/tensor.hpp"

namespace portrait::avatar {

using camera::Vec3;

inline constexpr int kExpressionDim = 6;

enum ExpressionComponent : int {
  kLeftEyeOpen = 0,
  kRightEyeOpen = 1,
  kMouthOpen = 2,
  kMouthWidth = 3,
  kLeftBrowRaise = 4,
  kRightBrowRaise = 5,
};

/// Uniquely colored facial regions. Their centroids are the probe fiducials.
enum class Feature : int { kLeftEye = 0, kRightEye, kMouth, kNose, kLeftBrow, kRightBrow };
inline constexpr int kFeatureCount = 6;

struct IdentityParams {
  uint64_t seed = 0;
  Vec3 head_radii{0.08, 0.11, 0.09};
  Vec3 skin_color{0.8, 0.6, 0.45};
  std::array<Vec3, kFeatureCount> feature_colors{};
  Vec3 torso_size{0.32, 0.20, 0.14};
  Vec3 torso_color{0.45, 0.45, 0.5};

  void validate() const;
};

/// Procedurally sampled identity; feature hues stay distinct from skin and torso.
IdentityParams sample_identity(uint64_t seed);

struct ExpressionParams {
  std::array<double, kExpressionDim> values{};
  void validate() const;
  bool operator==(const ExpressionParams&) const = default;
};

struct HeadPose {
  double yaw = 0, pitch = 0, roll = 0;
  Vec3 neck_offset = Vec3::Zero();
  void validate() const;
  bool operator==(const HeadPose& o) const {
    return yaw == o.yaw && pitch == o.pitch && roll == o.roll && neck_offset == o.neck_offset;
  }
};

/// Fixed geometry constants of the procedural rig.
struct RigConfig {
  double eye_half_width = 0.014;
  double eyelid_min_half_height = 0.001;
  double eyelid_slope = 0.010;  // half-height gained per unit eye_open
  double mouth_half_width = 0.018;
  double mouth_width_slope = 0.010;
  double mouth_min_half_height = 0.002;
  double mouth_open_slope = 0.012;
  double brow_half_width = 0.016;
  double brow_half_height = 0.003;
  double brow_raise = 0.008;
  double nose_radius = 0.006;
  double feature_offset = 0.002;
  int head_rings = 24;
  int head_segments = 32;
  int disc_segments = 16;

  /// Eyelid aperture (upper to lower apex distance) for a given eye_open value.
  double aperture(double eye_open) const { return 2.0 * (eyelid_min_half_height + eyelid_slope * eye_open); }
};

enum class Fiducial : int {
  kLeftEyeCenter = 0,
  kRightEyeCenter,
  kLeftLidUpper,
  kLeftLidLower,
  kRightLidUpper,
  kRightLidLower,
  kMouthLeft,
  kMouthRight,
  kMouthUpper,
  kMouthLower,
  kMouthCenter,
  kNoseTip,
  kLeftBrowCenter,
  kRightBrowCenter,
};
inline constexpr int kFiducialCount = 14;
const char* fiducial_name(Fiducial f);

/// Fiducials used by the landmark pathway by default (K = 8).
const std::vector<Fiducial>& default_landmark_set();
/// Fiducial located at the centroid of each colored feature region.
Fiducial feature_fiducial(Feature f);

struct Keypoints3D {
  std::array<Vec3, kFiducialCount> points{};
  const Vec3& operator[](Fiducial f) const { return points[static_cast<int>(f)]; }
  Vec3& operator[](Fiducial f) { return points[static_cast<int>(f)]; }
};

/// Linear blendshape rig for one identity: V = base + Σ_k e_k · B_k, then the
/// head part is rigidly posed about the neck pivot. The torso stays put.
class AvatarRig {
 public:
  explicit AvatarRig(const IdentityParams& identity, const RigConfig& config = {});

  raster::TriMesh build_mesh(const ExpressionParams& expr, const HeadPose& pose) const;
  /// Head and torso only (no facial features); what the normal maps show.
  raster::TriMesh build_body_mesh(const HeadPose& pose) const;
  Keypoints3D keypoints(const ExpressionParams& expr, const HeadPose& pose) const;

  const std::vector<Vec3>& base_vertices() const { return base_.vertices; }
  const std::vector<Vec3>& blendshape(int k) const { return blendshapes_[static_cast<size_t>(k)]; }
  /// Vertex indices that a component can move.
  std::vector<int> support(int k) const;
  Vec3 neck_pivot() const { return neck_pivot_; }
  Vec3 head_center() const { return Vec3::Zero(); }
  const IdentityParams& identity() const { return identity_; }
  const RigConfig& config() const { return config_; }

 private:
  struct FeatureFrame {
    Vec3 center, right, down, normal;
  };
  FeatureFrame feature_frame(double polar, double azimuth) const;
  Vec3 pose_point(const Vec3& p, const HeadPose& pose) const;
  void add_disc(const FeatureFrame& frame, double half_w, double half_h, const Vec3& color,
                const std::vector<std::pair<int, Vec3>>& shapes);

  IdentityParams identity_;
  RigConfig config_;
  raster::TriMesh base_;  // head + features at zero expression, unposed
  raster::TriMesh torso_;
  size_t head_vertex_count_ = 0;
  size_t head_face_count_ = 0;
  std::array<std::vector<Vec3>, kExpressionDim> blendshapes_;
  std::array<FeatureFrame, kFeatureCount> frames_{};
  Vec3 neck_pivot_;
};

raster::TriMesh build_mesh(const IdentityParams& id, const ExpressionParams& expr, const HeadPose& pose);
Keypoints3D keypoints(const IdentityParams& id, const ExpressionParams& expr, const HeadPose& pose);

enum class SequenceKind { kPhoneLike, kStudioLike, kViewSweep, kDynamicSweep };
inline constexpr std::array<SequenceKind, 4> kAllKinds{SequenceKind::kPhoneLike, SequenceKind::kStudioLike,
                                                       SequenceKind::kViewSweep, SequenceKind::kDynamicSweep};
std::string to_string(SequenceKind kind);
SequenceKind sequence_kind_from_string(const std::string& name);

struct SequenceSample {
  Video frames;
  Video normal_maps;
  camera::Trajectory trajectory;
  std::vector<ExpressionParams> expressions;
  std::vector<HeadPose> head_poses;
  IdentityParams identity;
  SequenceKind kind = SequenceKind::kPhoneLike;
  uint64_t seed = 0;

  int length() const { return static_cast<int>(frames.size()); }
  void validate() const;
  /// Frames [begin, begin + count) as a new sample.
  SequenceSample clip(int begin, int count) const;
};

struct SequenceOptions {
  int spatial_factor = 4;
  double fov_deg = 72.0;
  camera::SpinOptions spin{};
  camera::SpiralOptions spiral{};
  /// Ornstein-Uhlenbeck style temporal dynamics for expression and pose.
  double ou_theta = 0.15;
  double ou_sigma = 0.08;
  double max_yaw_deg = 30.0;
  double max_pitch_deg = 15.0;
  double max_roll_deg = 10.0;
  RigConfig rig{};
};

SequenceSample generate_sequence(SequenceKind kind, uint64_t seed, int frames, int resolution,
                                 const SequenceOptions& options = {});
SequenceSample generate_sequence(SequenceKind kind, const IdentityParams& identity, uint64_t seed, int frames,
                                 int resolution, const SequenceOptions& options = {});

/// Renders frames and normal maps of an already annotated sequence.
void render_sequence(SequenceSample& sample, const RigConfig& rig = {});

struct DatasetKindConfig {
  int identities = 0;
  int trajectories = 0;  // sequences per identity
};

struct DatasetConfig {
  uint64_t root_seed = 0;
  int resolution = 32;
  int frames = 81;
  int identity_offset = 0;  // identity indices start here (held-out splits)
  std::map<SequenceKind, DatasetKindConfig> kinds;
  SequenceOptions sequence{};
  int workers = 1;
};

/// Writes `<root>/<kind>/<seq_id>/{meta,camera,expression,headpose}.json`,
/// `frames/%05d.png` and `normals/%05d.png`. Returns the sequence directories.
std::vector<std::filesystem::path> generate_dataset(const DatasetConfig& config, const std::filesystem::path& root,
                                                    bool force = false);

void write_sequence(const SequenceSample& sample, const std::filesystem::path& dir, const nlohmann::json& extra_meta = {});
SequenceSample read_sequence(const std::filesystem::path& dir);
/// Frames [begin, begin + count) only; annotations are clipped to match.
SequenceSample read_sequence(const std::filesystem::path& dir, int begin, int count);
/// Frame count recorded in a sequence's meta.json.
int sequence_length(const std::filesystem::path& dir);

/// Sequence seed derived from the dataset root seed and indices.
uint64_t derive_seed(uint64_t root, uint64_t a, uint64_t b = 0, uint64_t c = 0);

nlohmann::json to_json(const IdentityParams& id);
IdentityParams identity_from_json(const nlohmann::json& j);

}  // namespace portrait::avatar
