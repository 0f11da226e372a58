#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "portrait/camera.hpp"
#include "portrait/tensor.hpp"

namespace portrait::raster {

using camera::Vec3;

struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;  // counter-clockwise seen from outside
  std::vector<Vec3> colors;
  std::vector<Vec3> normals;

  bool empty() const { return faces.empty(); }
  void validate() const;
  /// Appends `other`, offsetting its face indices.
  void append(const TriMesh& other);
};

struct RenderOutput {
  int height = 0;
  int width = 0;
  Image color;
  Image normal_map;
  std::vector<double> depth;  // +inf where nothing was drawn
  std::vector<uint8_t> mask;

  bool covered(int y, int x) const { return mask[static_cast<size_t>(y) * width + x] != 0; }
};

struct RenderOptions {
  Vec3 background{0.35, 0.35, 0.35};
  double ambient = 0.35;
  double near_plane = 1e-3;
};

/// Z-buffered perspective rasterization with a top-left fill rule, pixel centers
/// at half-integers and back-face culling. Normal maps hold camera-space normals
/// encoded as (n + 1) / 2; uncovered pixels read (0.5, 0.5, 0.5).
RenderOutput render(const TriMesh& mesh, const camera::CameraPose& pose, const camera::Intrinsics& intrinsics,
                    const RenderOptions& options = {});

inline Vec3 encode_normal(const Vec3& n) { return (n + Vec3::Ones()) * 0.5; }
inline Vec3 decode_normal(const Vec3& rgb) { return rgb * 2.0 - Vec3::Ones(); }

}  // namespace portrait::raster
