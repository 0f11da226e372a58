#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "portrait/error.hpp"

namespace portrait {

/// Dense row-major N-d array of doubles. Used for latents, condition stacks and
/// ray maps; the autograd engine works on 2-d Eigen matrices instead.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int64_t> shape, double fill = 0.0)
      : shape_(std::move(shape)), data_(count(shape_), fill) {}
  Tensor(std::vector<int64_t> shape, std::vector<double> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    require(static_cast<int64_t>(data_.size()) == count(shape_), ErrorCode::kShapeMismatch,
            "tensor data size does not match shape");
  }

  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t dim(size_t axis) const { return shape_.at(axis); }
  size_t rank() const { return shape_.size(); }
  int64_t size() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }
  std::vector<double>& storage() { return data_; }
  const std::vector<double>& storage() const { return data_; }

  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  int64_t offset(std::initializer_list<int64_t> index) const {
    int64_t off = 0;
    size_t axis = 0;
    for (int64_t i : index) off = off * shape_[axis++] + i;
    return off;
  }
  double& at(std::initializer_list<int64_t> index) { return data_[offset(index)]; }
  double at(std::initializer_list<int64_t> index) const { return data_[offset(index)]; }

  /// Number of elements in one index of the leading axis.
  int64_t stride0() const { return shape_.empty() ? 0 : size() / shape_[0]; }

  /// Copy of leading-axis slices [begin, end).
  Tensor slice0(int64_t begin, int64_t end) const;

  static int64_t count(const std::vector<int64_t>& shape) {
    return std::accumulate(shape.begin(), shape.end(), int64_t{1}, std::multiplies<>());
  }

  bool operator==(const Tensor& other) const = default;

 private:
  std::vector<int64_t> shape_;
  std::vector<double> data_;
};

std::string shape_string(const std::vector<int64_t>& shape);

/// H×W×3 float image with values nominally in [0,1].
struct Image {
  int height = 0;
  int width = 0;
  std::vector<float> rgb;

  Image() = default;
  Image(int h, int w, float fill = 0.0f)
      : height(h), width(w), rgb(static_cast<size_t>(h) * w * 3, fill) {}

  float& operator()(int y, int x, int c) { return rgb[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  float operator()(int y, int x, int c) const {
    return rgb[(static_cast<size_t>(y) * width + x) * 3 + c];
  }

  bool operator==(const Image& other) const = default;
};

using Video = std::vector<Image>;

/// Rounds every channel to the nearest k/255.
Image quantize8(const Image& image);

}  // namespace portrait
