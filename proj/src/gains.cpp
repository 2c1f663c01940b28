#include "declearn/gains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace declearn {

double GainSchedule::a(long k) const {
  return a_scale * std::pow(static_cast<double>(k + 1), -a_exponent);
}

double GainSchedule::b(long k) const {
  return b_scale * std::pow(static_cast<double>(k + 1), -b_exponent);
}

GainReport validate_gains(const GainSchedule& s, long horizon) {
  if (s.a_exponent <= 0.0 || s.b_exponent <= 0.0) {
    throw std::invalid_argument("validate_gains: exponents must be positive");
  }
  if (s.a_scale <= 0.0 || s.b_scale <= 0.0) {
    throw std::invalid_argument("validate_gains: scales must be positive");
  }
  if (horizon < 10) {
    throw std::invalid_argument("validate_gains: horizon must be >= 10");
  }

  GainReport r{};
  r.cond1 = s.a_exponent > 0.0 && s.b_exponent > 0.0;
  r.cond2 = s.a_exponent > 0.5 && s.b_exponent > 0.5;
  r.cond3_sum = s.a_exponent <= 1.0;

  // Decade-wise suprema of the rate ratio over the horizon.
  double sup_all = 0.0;
  double sup_last = 0.0;   // k in (horizon/10, horizon]
  double sup_prev = 0.0;   // k in (horizon/100, horizon/10]
  const long last_lo = horizon / 10;
  const long prev_lo = horizon / 100;
  double ak = s.a(0);
  for (long k = 0; k < horizon; ++k) {
    const double ak1 = s.a(k + 1);
    const double bk = s.b(k);
    const double num = std::max(ak - ak1, bk - ak);
    const double ratio = std::max(num, 0.0) / (ak * ak + bk * bk);
    sup_all = std::max(sup_all, ratio);
    if (k > last_lo) sup_last = std::max(sup_last, ratio);
    else if (k > prev_lo) sup_prev = std::max(sup_prev, ratio);
    ak = ak1;
  }
  r.rate_sup = sup_all;
  r.cond3_rate = std::isfinite(sup_all) &&
                 sup_last <= 1.05 * sup_prev + 1e-9;
  return r;
}

}  // namespace declearn
