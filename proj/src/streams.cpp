#include "declearn/streams.hpp"

#include <cmath>
#include <stdexcept>

namespace declearn {

Interval input_support(const StreamSpec& spec, long t) {
  switch (spec.input_rule) {
    case InputRule::ShiftingUniform: {
      if (t < 0) throw std::invalid_argument("input_support: t must be >= 0");
      const double k = static_cast<double>(t / 2);
      if (t % 2 == 0) {
        return Interval{-2.0, 4.0 - 3.0 / (k + 1.0)};
      }
      return Interval{3.0 / (k + 1.0) - 2.0, 4.0};
    }
    case InputRule::IidUniform:
    case InputRule::IidCustom:
      return Interval{spec.uniform_lo, spec.uniform_hi};
  }
  return Interval{0.0, 0.0};
}

double sample_input(const StreamSpec& spec, std::uint32_t replicate, int node,
                    long t) {
  CounterRng rng = derive_rng(spec.master_seed, replicate,
                              static_cast<std::uint32_t>(node),
                              static_cast<std::uint64_t>(t),
                              StreamChannel::Input);
  if (spec.input_rule == InputRule::IidCustom) {
    if (!spec.custom_sampler) {
      throw std::invalid_argument("sample_input: iid_custom needs a sampler");
    }
    return spec.custom_sampler(rng);
  }
  const Interval support = input_support(spec, t);
  return rng.next_uniform(support.lo, support.hi);
}

double sample_noise(const StreamSpec& spec, std::uint32_t replicate, int node,
                    long t) {
  if (spec.noise_variance < 0.0) {
    throw std::invalid_argument("sample_noise: variance must be >= 0");
  }
  if (spec.noise_variance == 0.0) return 0.0;
  CounterRng rng = derive_rng(spec.master_seed, replicate,
                              static_cast<std::uint32_t>(node),
                              static_cast<std::uint64_t>(t),
                              StreamChannel::Noise);
  return std::sqrt(spec.noise_variance) * rng.next_normal();
}

}  // namespace declearn
