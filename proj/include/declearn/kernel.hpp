#pragma once

#include <Eigen/Dense>

namespace declearn {

struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return x >= lo && x <= hi; }
  double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
};

enum class KernelFamily { Gaussian, Laplace, Polynomial };

/// Mercer kernel on a compact interval. Immutable; eval is pure.
///
/// gaussian(gamma):     K(x,y) = exp(-gamma (x-y)^2)
/// laplace(scale):      K(x,y) = exp(-|x-y| / scale)
/// polynomial(d, c):    K(x,y) = (x y + c)^d
///
/// Points outside the domain are rejected unless the kernel was made
/// lenient, in which case they are clamped to the boundary.
class Kernel {
 public:
  static Kernel gaussian(double gamma, Interval domain);
  static Kernel laplace(double scale, Interval domain);
  static Kernel polynomial(int degree, double offset, Interval domain);

  Kernel with_lenient_domain() const;

  KernelFamily family() const { return family_; }
  Interval domain() const { return domain_; }
  bool lenient() const { return lenient_; }

  double operator()(double x, double y) const;

  friend bool operator==(const Kernel& a, const Kernel& b);

  /// K(x, pts[i]) for every i, vectorized. pts are assumed in-domain
  /// (they come from validated grids); x is checked as in eval.
  Eigen::VectorXd column(const Eigen::Ref<const Eigen::VectorXd>& pts,
                         double x) const;

  double check_point(double x) const;  // domain policy applied to one point

 private:
  Kernel(KernelFamily family, double param, int degree, Interval domain);

  KernelFamily family_;
  double param_;  // gamma, scale, or offset depending on family
  int degree_ = 0;
  Interval domain_;
  bool lenient_ = false;
};

inline double eval(const Kernel& k, double x, double y) { return k(x, y); }

Eigen::MatrixXd gram(const Kernel& k,
                     const Eigen::Ref<const Eigen::VectorXd>& points);

/// Upper bound on K(x,x) over the kernel's domain.
double sup_diag_bound(const Kernel& k);

}  // namespace declearn
