#pragma once

namespace declearn {

/// Decreasing step-size pair a(k) = a_scale (k+1)^-a_exponent (innovation)
/// and b(k) = b_scale (k+1)^-b_exponent (consensus).
struct GainSchedule {
  double a_exponent;
  double b_exponent;
  double a_scale = 1.0;
  double b_scale = 1.0;

  double a(long k) const;
  double b(long k) const;
};

/// Finite-horizon checks of the step-size conditions:
///   cond1      both sequences positive and monotonically decreasing
///   cond2      sum a^2 and sum b^2 finite (exponent > 1/2)
///   cond3_sum  sum a infinite (exponent <= 1)
///   cond3_rate sup_k max{a(k)-a(k+1), b(k)-a(k)} / (a^2(k)+b^2(k)) bounded,
///              with the decade-wise sup non-increasing at the tail. The
///              underlying condition is asymptotic, so this is evidence over
///              the horizon, not a proof.
struct GainReport {
  bool cond1;
  bool cond2;
  bool cond3_sum;
  bool cond3_rate;
  double rate_sup;

  bool all() const { return cond1 && cond2 && cond3_sum && cond3_rate; }
};

GainReport validate_gains(const GainSchedule& s, long horizon);

}  // namespace declearn
