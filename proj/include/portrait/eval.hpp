#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "portrait/avatar.hpp"
#include "portrait/tensor.hpp"

namespace portrait::eval {

/// Returned by psnr for identical inputs.
inline constexpr double kPsnrIdentical = std::numeric_limits<double>::infinity();

double psnr(const Image& a, const Image& b);
/// Mean of per-frame values.
double psnr(const Video& a, const Video& b);
/// Channel-averaged SSIM over valid 11×11 Gaussian windows (σ = 1.5).
double ssim(const Image& a, const Image& b);
double ssim(const Video& a, const Video& b);

struct FeatureRegion {
  bool found = false;
  int area = 0;
  double u = 0, v = 0;  // centroid in pixels (cell centers at +0.5)
  int min_x = 0, max_x = -1;
  int min_y = 0, max_y = -1;
};

/// Labels pixels whose chromaticity matches a feature color of `identity` and
/// keeps the largest connected region per feature.
std::array<FeatureRegion, avatar::kFeatureCount> segment_features(const Image& frame,
                                                                   const avatar::IdentityParams& identity);

struct CameraProbeResult {
  double mean_error_px = 0;
  int measured = 0;
  int undetected = 0;
  bool failed = false;
};

/// Feature centroids in the frames against the projected fiducials of the
/// ground-truth rig seen through `trajectory`.
CameraProbeResult camera_probe(const Video& frames, const camera::Trajectory& trajectory,
                               const avatar::IdentityParams& identity,
                               const std::vector<avatar::ExpressionParams>& expressions,
                               const std::vector<avatar::HeadPose>& head_poses);

/// Eye aperture in pixels: region area over its horizontal extent.
double eye_aperture_px(const FeatureRegion& region);

struct ExpressionProbeResult {
  double spearman = 0;
  bool applicable = true;
  std::vector<double> measured;
};

/// Spearman correlation between the mean measured eye aperture and the mean
/// driving eye_open per frame.
ExpressionProbeResult expression_probe(const Video& frames, const std::vector<avatar::ExpressionParams>& driving,
                                       const avatar::IdentityParams& identity);

/// Spearman rank correlation with average ranks for ties; NaN if either input is constant.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

/// Total-variation distance between 4×4×4 color histograms of the non-background
/// pixels of each frame and of the reference, averaged over frames.
double identity_hist_dist(const Video& frames, const Image& reference);

struct EvalReport {
  std::string name;
  int frames = 0;
  double psnr_db = 0;
  double ssim = 0;
  double cam_reproj_px = 0;
  bool cam_probe_failed = false;
  int cam_undetected = 0;
  double expr_spearman = 0;
  bool expr_applicable = true;
  double identity_hist_dist = 0;

  nlohmann::json to_json() const;
};

/// Compares generated frames with a ground-truth sequence; probes use the
/// ground-truth annotations and `trajectory` (defaults to the sequence's own).
EvalReport evaluate(const Video& generated, const avatar::SequenceSample& truth,
                    const std::optional<camera::Trajectory>& trajectory = std::nullopt);

void write_report_json(const std::vector<EvalReport>& reports, const std::filesystem::path& path);
void append_report_csv(const std::vector<EvalReport>& reports, const std::filesystem::path& path);

}  // namespace portrait::eval
