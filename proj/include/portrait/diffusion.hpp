#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "portrait/autograd.hpp"
#include "portrait/model.hpp"
#include "portrait/tensor.hpp"

namespace portrait::diffusion {

/// z_t = (1 − t)·z + t·ε with velocity target ε − z.
struct FlowSample {
  Tensor z;
  Tensor eps;
  double t = 0;
  Tensor z_t;
  Tensor v_target;
};

FlowSample make_training_pair(const Tensor& z, const Tensor& eps, double t);

Tensor gaussian(const std::vector<int64_t>& shape, std::mt19937_64& rng);

enum class TimestepSampling { kUniform, kLogitNormal };
double sample_timestep(std::mt19937_64& rng, TimestepSampling mode = TimestepSampling::kUniform);

/// One training item: clean latents of the video slots plus their conditions.
struct TrainingItem {
  Tensor z;  // l×h×w×c
  const model::Conditions* conditions = nullptr;
};

/// Mean squared velocity error over the video slots, averaged over the batch.
/// Throws kNumerical if the prediction is not finite.
nn::Var loss(const model::PortraitModel& model, const std::vector<TrainingItem>& batch,
             const std::vector<FlowSample>& pairs);

/// Draws ε and t per item and evaluates `loss`.
nn::Var sample_loss(const model::PortraitModel& model, const std::vector<TrainingItem>& batch, std::mt19937_64& rng,
                    TimestepSampling mode = TimestepSampling::kUniform);

using VelocityFn = std::function<Tensor(const Tensor& z, double t)>;

/// Euler integration from t = 1 to t = 0 on a uniform grid:
/// z ← z − Δt · v̂(z, t_k) for t_k = k/steps, k = steps..1.
Tensor integrate(const VelocityFn& velocity, Tensor z1, int steps);

/// Starts from ε ~ N(0, 1) drawn from `seed`.
Tensor sample(const VelocityFn& velocity, const std::vector<int64_t>& shape, int steps, uint64_t seed);

/// Samples latents for `conditions` with a trained model.
Tensor sample(const model::PortraitModel& model, const model::Conditions& conditions,
              const std::vector<int64_t>& shape, int steps, uint64_t seed);

}  // namespace portrait::diffusion
