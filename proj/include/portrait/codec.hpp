#pragma once

#include <filesystem>

#include "portrait/tensor.hpp"

namespace portrait::codec {

/// l×h×w×c latent of a T×H×W×3 video. Frame 0 fills slot 0 alone; frames
/// 4j-3..4j fill slot j. Within a slot the channel index is
/// ((sub * s + dy) * s + dx) * 3 + rgb.
struct LatentVideo {
  Tensor data;
  int frames = 0;  // T
  int height = 0;  // H
  int width = 0;   // W
  int factor = 4;  // s

  int slots() const { return static_cast<int>(data.dim(0)); }
  int latent_height() const { return static_cast<int>(data.dim(1)); }
  int latent_width() const { return static_cast<int>(data.dim(2)); }
  int channels() const { return static_cast<int>(data.dim(3)); }
  void validate() const;
  bool operator==(const LatentVideo&) const = default;
};

inline constexpr int kTemporalFactor = 4;

inline int latent_slots(int frames) { return (frames + 3) / 4; }
inline int latent_channels(int factor) { return 3 * kTemporalFactor * factor * factor; }
/// Latent slot receiving a frame, and its temporal sub-slot.
inline int slot_of_frame(int frame) { return frame == 0 ? 0 : (frame + 3) / 4; }
inline int sub_slot_of_frame(int frame) { return frame == 0 ? 0 : (frame - 1) % 4; }

void check_video_shape(int frames, int height, int width, int factor);

LatentVideo encode(const Video& video, int factor = 4);
Video decode(const LatentVideo& latent);
/// 1×h×w×c latent of a single image; equals slot 0 of encode({image}).
Tensor encode_image(const Image& image, int factor = 4);

/// Raw dump: eight little-endian int32 (l,h,w,c,T,H,W,s) then float32 data.
void write_debug_dump(const LatentVideo& latent, const std::filesystem::path& path);
LatentVideo read_debug_dump(const std::filesystem::path& path);

}  // namespace portrait::codec
