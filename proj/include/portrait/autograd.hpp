#pragma once

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <vector>

namespace portrait::nn {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowVector = Eigen::Matrix<double, 1, Eigen::Dynamic, Eigen::RowMajor>;

struct Node {
  Matrix value;
  Matrix grad;
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> inputs;
  std::function<void(Node&)> backward;

  void accumulate(const Matrix& g);
};

/// Handle to a node in a dynamically recorded computation graph. All values
/// are 2-d; token streams are rows, features are columns.
class Var {
 public:
  Var() = default;
  explicit Var(Matrix value, bool requires_grad = false);

  const Matrix& value() const { return node_->value; }
  Matrix& mutable_value() { return node_->value; }
  const Matrix& grad() const { return node_->grad; }
  Matrix& mutable_grad() { return node_->grad; }
  bool requires_grad() const { return node_ && node_->requires_grad; }
  Eigen::Index rows() const { return node_->value.rows(); }
  Eigen::Index cols() const { return node_->value.cols(); }
  bool defined() const { return static_cast<bool>(node_); }
  void zero_grad() { node_->grad.resize(0, 0); }

  const std::shared_ptr<Node>& node() const { return node_; }

 private:
  std::shared_ptr<Node> node_;
};

/// Disables graph recording while alive.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

bool grad_enabled();

/// Reverse-mode sweep from a 1×1 value. Gradients accumulate into every
/// reachable leaf that requires grad.
void backward(const Var& loss);

Var constant(Matrix value);

Var matmul(const Var& a, const Var& b);
/// x·W + b with W stored in×out and b as a 1×out row.
Var linear(const Var& x, const Var& weight, const Var& bias);
Var linear(const Var& x, const Var& weight);
Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);
Var add_row(const Var& a, const Var& row);
Var scale(const Var& a, double s);
Var silu(const Var& a);
Var gelu(const Var& a);
/// Per-row standardization without affine parameters.
Var layer_norm(const Var& x, double eps = 1e-6);
Var gather_rows(const Var& a, std::vector<int> index);
Var slice_rows(const Var& a, Eigen::Index begin, Eigen::Index count);
Var slice_cols(const Var& a, Eigen::Index begin, Eigen::Index count);
Var concat_cols(const std::vector<Var>& parts);
Var concat_rows(const std::vector<Var>& parts);
/// Row-major reinterpretation with the same element count.
Var reshape(const Var& a, Eigen::Index rows, Eigen::Index cols);
/// Mean over rows; returns 1×cols.
Var mean_rows(const Var& a);
Var mean_all(const Var& a);
/// Mean squared difference against a constant target; returns 1×1.
Var mse(const Var& prediction, const Matrix& target);

/// Multi-head scaled dot-product attention. Tokens attend only to tokens that
/// share their segment id; an empty segment list means one segment.
Var attention(const Var& q, const Var& k, const Var& v, int heads,
              const std::vector<int>& segments = {});

}  // namespace portrait::nn
