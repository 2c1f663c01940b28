#include "declearn/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace declearn {

namespace {

constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85u;
constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline void philox_round(std::uint32_t ctr[4], const std::uint32_t key[2]) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM4x32A) * ctr[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM4x32B) * ctr[2];
  const std::uint32_t out0 =
      static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0];
  const std::uint32_t out1 = static_cast<std::uint32_t>(p1);
  const std::uint32_t out2 =
      static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1];
  const std::uint32_t out3 = static_cast<std::uint32_t>(p0);
  ctr[0] = out0;
  ctr[1] = out1;
  ctr[2] = out2;
  ctr[3] = out3;
}

inline void philox10(const std::uint32_t counter[4], const std::uint32_t k[2],
                     std::uint32_t out[4]) {
  std::uint32_t ctr[4] = {counter[0], counter[1], counter[2], counter[3]};
  std::uint32_t key[2] = {k[0], k[1]};
  for (int round = 0; round < 10; ++round) {
    philox_round(ctr, key);
    key[0] += kPhiloxW32A;
    key[1] += kPhiloxW32B;
  }
  out[0] = ctr[0];
  out[1] = ctr[1];
  out[2] = ctr[2];
  out[3] = ctr[3];
}

}  // namespace

CounterRng::CounterRng(std::uint64_t master_seed, std::uint32_t replicate,
                       std::uint32_t node, std::uint64_t step,
                       StreamChannel channel) {
  if (step > 0xFFFFFFFFull) {
    throw std::invalid_argument("CounterRng: step index exceeds 2^32");
  }
  if (node >= (1u << 24)) {
    throw std::invalid_argument("CounterRng: node index exceeds 2^24");
  }
  key_[0] = static_cast<std::uint32_t>(master_seed);
  key_[1] = static_cast<std::uint32_t>(master_seed >> 32);
  base_[0] = static_cast<std::uint32_t>(step);
  base_[1] = node | (static_cast<std::uint32_t>(channel) << 24);
  base_[2] = replicate;
}

void CounterRng::refill() {
  const std::uint32_t counter[4] = {block_, base_[0], base_[1], base_[2]};
  philox10(counter, key_, buffer_);
  ++block_;
  pos_ = 0;
}

std::uint32_t CounterRng::next_u32() {
  if (pos_ >= 4) refill();
  return buffer_[pos_++];
}

std::uint64_t CounterRng::next_u64() {
  const std::uint64_t lo = next_u32();
  const std::uint64_t hi = next_u32();
  return lo | (hi << 32);
}

double CounterRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_uniform(double lo, double hi) {
  return lo + next_double() * (hi - lo);
}

double CounterRng::next_normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // u1 in (0,1) so the log is finite.
  const double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

CounterRng derive_rng(std::uint64_t master_seed, std::uint32_t replicate,
                      std::uint32_t node, std::uint64_t step,
                      StreamChannel channel) {
  return CounterRng(master_seed, replicate, node, step, channel);
}

}  // namespace declearn
