#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "portrait/autograd.hpp"

namespace portrait::nn {

using Rng = std::mt19937_64;

/// Named, ordered parameter registry. Modules keep Var handles that alias the
/// registered nodes, so the store sees every update the optimizer makes.
class ParameterStore {
 public:
  Var add(const std::string& name, Matrix init);
  const Var& get(const std::string& name) const;
  bool contains(const std::string& name) const;

  std::vector<std::pair<std::string, Var>>& items() { return items_; }
  const std::vector<std::pair<std::string, Var>>& items() const { return items_; }

  int64_t scalar_count() const;
  void zero_grad();
  /// Scales gradients so their global L2 norm is at most max_norm; returns the
  /// norm before clipping.
  double clip_grad_norm(double max_norm);

 private:
  std::vector<std::pair<std::string, Var>> items_;
};

enum class Init { kXavier, kZero, kNormalSmall };

struct Linear {
  Var weight;
  Var bias;

  Linear() = default;
  Linear(ParameterStore& store, const std::string& name, int in, int out, Rng& rng,
         Init init = Init::kXavier, bool with_bias = true);

  Var operator()(const Var& x) const { return bias.defined() ? linear(x, weight, bias) : matmul(x, weight); }
  int in_features() const { return static_cast<int>(weight.rows()); }
  int out_features() const { return static_cast<int>(weight.cols()); }
};

Matrix init_matrix(int rows, int cols, Init init, Rng& rng);

struct AdamWConfig {
  double beta1 = 0.9;
  double beta2 = 0.95;
  double eps = 1e-8;
  double weight_decay = 0.01;
};

/// Decoupled weight decay Adam. Decay is applied to weight matrices only, not
/// to 1-row bias/gain vectors.
class AdamW {
 public:
  AdamW(ParameterStore& store, AdamWConfig config = {});
  void step(double lr);
  int64_t steps() const { return step_; }

 private:
  ParameterStore& store_;
  AdamWConfig config_;
  std::vector<Matrix> m_;
  std::vector<Matrix> v_;
  int64_t step_ = 0;
};

/// Flat checkpoint: raw little-endian blob plus a JSON manifest mapping each
/// tensor name to {shape, dtype, offset}. `meta` is stored verbatim.
void save_checkpoint(const ParameterStore& store, const std::filesystem::path& blob_path,
                     const nlohmann::json& meta, const std::string& dtype = "float32");

/// Loads tensors into matching parameters. Every stored tensor must exist in the
/// store with an identical shape. Parameters absent from the file are left as
/// they are and returned.
std::vector<std::string> load_checkpoint(ParameterStore& store, const std::filesystem::path& blob_path);

nlohmann::json read_checkpoint_manifest(const std::filesystem::path& blob_path);
std::filesystem::path manifest_path_for(const std::filesystem::path& blob_path);

/// Sinusoidal embedding of `positions` into `dim` columns (sin half, cos half).
Matrix sinusoidal(const std::vector<double>& positions, int dim, double max_period = 10000.0);

}  // namespace portrait::nn
