#pragma once

#include <cstdint>

namespace declearn {

/// Independent sampling channels hanging off one master seed.
enum class StreamChannel : std::uint32_t {
  Input = 0,
  Noise = 1,
  Operator = 2,
  Probe = 3,
};

/// Counter-based generator (Philox4x32-10). A stream is addressed by
/// (master_seed, replicate, node, step, channel); equal addresses produce
/// equal draws on every platform, and distinct addresses produce
/// statistically independent streams. No state is shared between streams,
/// so replicates can be generated in parallel in any order.
class CounterRng {
 public:
  CounterRng(std::uint64_t master_seed, std::uint32_t replicate,
             std::uint32_t node, std::uint64_t step, StreamChannel channel);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double next_double();

  double next_uniform(double lo, double hi);

  /// Standard normal via Box-Muller (fixed draw count, no rejection).
  double next_normal();

 private:
  void refill();

  std::uint32_t key_[2];
  std::uint32_t base_[3];  // counter words c1..c3; c0 is the block index
  std::uint32_t block_ = 0;
  std::uint32_t buffer_[4];
  int pos_ = 4;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// Spec'd derivation entry point; identical arguments yield identical streams.
CounterRng derive_rng(std::uint64_t master_seed, std::uint32_t replicate,
                      std::uint32_t node, std::uint64_t step,
                      StreamChannel channel);

}  // namespace declearn
