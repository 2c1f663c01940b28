#pragma once

#include <cstdint>
#include <functional>

#include "declearn/kernel.hpp"
#include "declearn/rng.hpp"

namespace declearn {

enum class InputRule { ShiftingUniform, IidUniform, IidCustom };

/// Per-node input and noise generation. Stateless given the seed and the
/// (replicate, node, step) indices; every draw comes from its own derived
/// counter stream, so replicates parallelize without draw-order coupling.
struct StreamSpec {
  InputRule input_rule = InputRule::ShiftingUniform;
  double uniform_lo = -2.0;  // iid_uniform support
  double uniform_hi = 4.0;
  std::function<double(CounterRng&)> custom_sampler;  // iid_custom
  double noise_variance = 0.1;  // 0 means noise-free
  std::uint64_t master_seed = 0;
};

/// Support of the input distribution at instant t. The shifting rule
/// alternates, with k = t div 2, between [-2, 4 - 3/(k+1)] on even t and
/// [3/(k+1) - 2, 4] on odd t; both supports widen to [-2, 4].
Interval input_support(const StreamSpec& spec, long t);

double sample_input(const StreamSpec& spec, std::uint32_t replicate, int node,
                    long t);

/// Zero-mean Gaussian with the configured variance, independent across
/// (node, t) and of the inputs (distinct channels).
double sample_noise(const StreamSpec& spec, std::uint32_t replicate, int node,
                    long t);

}  // namespace declearn
