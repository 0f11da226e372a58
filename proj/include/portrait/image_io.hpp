#pragma once

#include <filesystem>

#include "portrait/tensor.hpp"

namespace portrait::io {

/// 8-bit RGB PNG; channels are clamped to [0,1] and rounded to k/255.
void write_png(const std::filesystem::path& path, const Image& image);
Image read_png(const std::filesystem::path& path);

}  // namespace portrait::io
