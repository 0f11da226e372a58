#pragma once

#include <string>
#include <vector>

#include "portrait/autograd.hpp"
#include "portrait/conditioning.hpp"
#include "portrait/nn.hpp"

namespace portrait::dit {

using nn::Matrix;
using nn::Var;

struct DiTConfig {
  int depth = 6;
  int dim = 192;
  int heads = 6;
  int patch = 1;  // per-token payload must not exceed dim (see README)
  int c_in = 0;
  int c_out = 0;
  int embed_dim = 192;  // D, width of t_i
  int mlp_ratio = 4;
  bool input_skip = true;  // zero-init linear path from each input patch to its output

  void validate() const;
};

/// γ ⊙ (z − μ(z)) / σ(z) + β with per-row statistics and ε = 1e-6.
Var adaln_modulate(const Var& z, const Var& gamma, const Var& beta);

/// Predicts `count` modulation vectors of width `dim` from SiLU(t_i). Gate (α)
/// columns start at zero, scale (γ) biases at one.
struct Modulation {
  nn::Linear proj;
  int dim = 0;
  int count = 0;

  Modulation() = default;
  Modulation(nn::ParameterStore& store, const std::string& name, int embed_dim, int dim,
             const std::vector<char>& roles, nn::Rng& rng);
  /// (slots × D) -> per-vector (slots × dim) list.
  std::vector<Var> operator()(const Var& t) const;
};

struct Block {
  Modulation mod;  // γ1 β1 α1 γ2 β2 α2
  nn::Linear qkv, out, fc1, fc2;
};

class DiT {
 public:
  DiT() = default;
  DiT(nn::ParameterStore& store, const std::string& name, const DiTConfig& config, nn::Rng& rng);

  /// bundle: (l+1)×h×w×c_in, per_frame: (l+1)×D. Returns the velocity of the
  /// l video slots as an (l·h·w)×c_out matrix in slot, row, column order.
  Var forward(const conditioning::ConditionBundle& bundle, const Var& per_frame) const;

  /// Test hook: skips the attention sub-layer in every block.
  void set_attention_enabled(bool enabled) { attention_enabled_ = enabled; }
  const DiTConfig& config() const { return config_; }

 private:
  DiTConfig config_;
  nn::Linear embed_;
  std::vector<Block> blocks_;
  Modulation final_mod_;  // γ β
  nn::Linear head_;
  nn::Linear skip_;
  bool attention_enabled_ = true;
};

/// Factorized position code for a token at (slot, row, col): temporal sinusoid
/// over all columns plus row and column sinusoids over each half.
Matrix position_encoding(int slots, int rows, int cols, int dim);

}  // namespace portrait::dit
