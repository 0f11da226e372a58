#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "portrait/tensor.hpp"

namespace portrait::camera {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Convention: right-handed, camera looks down +z, x right, y down. World
// coordinates share the axes, so world "up" is -y. Poses are world-to-camera.

struct Intrinsics {
  double fx = 0, fy = 0, cx = 0, cy = 0;
  int width = 0, height = 0;

  /// Square-pixel pinhole with the given horizontal and vertical field of view.
  static Intrinsics from_fov(int width, int height, double fov_deg);
  void validate() const;
  bool operator==(const Intrinsics&) const = default;
};

struct CameraPose {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static CameraPose identity() { return {}; }
  /// Pose at `center` looking at `target`, with image y aligned to world +y.
  static CameraPose look_at(const Vec3& center, const Vec3& target);

  Vec3 center() const { return -rotation.transpose() * translation; }
  Vec3 forward() const { return rotation.row(2).transpose(); }
  Vec3 transform(const Vec3& world) const { return rotation * world + translation; }
  /// Composition: (a * b)(x) = a(b(x)).
  CameraPose operator*(const CameraPose& other) const;
  CameraPose inverse() const;

  /// Throws kInvalidPose unless rotation is orthonormal with det +1 (tol 1e-6).
  void validate() const;
  bool operator==(const CameraPose& other) const {
    return rotation == other.rotation && translation == other.translation;
  }
};

enum class TrajectoryKind { kSpin, kSpiral, kStatic };
std::string to_string(TrajectoryKind kind);
TrajectoryKind trajectory_kind_from_string(const std::string& name);

struct Trajectory {
  std::vector<CameraPose> poses;
  Intrinsics intrinsics;
  TrajectoryKind kind = TrajectoryKind::kStatic;

  size_t size() const { return poses.size(); }
  void validate() const;
  bool operator==(const Trajectory&) const = default;
};

/// Per-pixel Plücker field: channels 0-2 unit direction, 3-5 moment o × d.
/// Stored as an out_h × out_w × 6 tensor.
using RayMap = Tensor;

/// Maps reference-camera coordinates to driving-camera coordinates.
CameraPose relative_pose(const CameraPose& driving, const CameraPose& reference);

/// Plücker rays of the driving camera expressed in the reference frame, sampled
/// at the centers of an out_h × out_w grid spanning the full image plane.
RayMap plucker_ray_map(const CameraPose& relative, const Intrinsics& intrinsics, int out_h, int out_w);

/// Unit ray direction (reference frame) through image point (u, v) in pixels.
Vec3 pixel_ray(const CameraPose& relative, const Intrinsics& intrinsics, double u, double v);

/// Pinhole projection of a world point; returns (u, v, depth).
Vec3 project(const CameraPose& pose, const Intrinsics& intrinsics, const Vec3& world);

struct SpinOptions {
  std::pair<double, double> distance_range{0.25, 0.40};
  double max_elevation_deg = 5.0;
  /// Oval axis ratio sampled uniformly from this range.
  std::pair<double, double> axis_ratio_range{1.0, 1.3};
};

Trajectory spin_trajectory(uint64_t seed, int frames, const Intrinsics& intrinsics, const Vec3& look_at,
                           const SpinOptions& options = {});

struct SpiralOptions {
  int n_seeds = 4;
  std::pair<double, double> yaw_range_deg{-90.0, 90.0};
  std::pair<double, double> distance_range{0.25, 0.40};
  std::pair<double, double> elevation_range_deg{-10.0, 10.0};
};

/// Spherical anchor around the look-at point.
struct SphericalPoint {
  double yaw = 0;        // radians, 0 = in front of the subject (-z side)
  double elevation = 0;  // radians, positive = above
  double distance = 0;   // meters
};

Vec3 spherical_to_world(const SphericalPoint& p, const Vec3& look_at);
SphericalPoint world_to_spherical(const Vec3& position, const Vec3& look_at);

/// Shape-preserving piecewise-cubic curve through spherical anchors, parameterized
/// by anchor index in [0, n-1].
class SpiralCurve {
 public:
  explicit SpiralCurve(std::vector<SphericalPoint> anchors);

  SphericalPoint evaluate(double s) const;
  const std::vector<SphericalPoint>& anchors() const { return anchors_; }
  /// Parameters spaced uniformly in arc length (world positions about look_at).
  std::vector<double> arc_length_parameters(int count, const Vec3& look_at) const;

 private:
  std::vector<SphericalPoint> anchors_;
  std::vector<std::vector<double>> slopes_;  // per channel: yaw, elevation, distance
};

/// Anchors sampled by the spiral generator for a given seed (sorted by yaw).
std::vector<SphericalPoint> spiral_anchors(uint64_t seed, const SpiralOptions& options);

Trajectory spiral_trajectory(uint64_t seed, int frames, const Intrinsics& intrinsics, const Vec3& look_at,
                             const SpiralOptions& options = {});

Trajectory static_trajectory(const CameraPose& pose, int frames, const Intrinsics& intrinsics);

nlohmann::json to_json(const Trajectory& trajectory);
Trajectory trajectory_from_json(const nlohmann::json& j);

/// Signed yaw (radians) and elevation of a camera center about look_at.
double yaw_of(const Vec3& center, const Vec3& look_at);
double elevation_of(const Vec3& center, const Vec3& look_at);

Mat3 rotation_yaw_pitch_roll(double yaw, double pitch, double roll);

}  // namespace portrait::camera
