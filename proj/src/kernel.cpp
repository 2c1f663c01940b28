#include "declearn/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace declearn {

Kernel::Kernel(KernelFamily family, double param, int degree, Interval domain)
    : family_(family), param_(param), degree_(degree), domain_(domain) {
  if (!(domain.lo < domain.hi)) {
    throw std::invalid_argument("Kernel: domain must be a nonempty interval");
  }
}

Kernel Kernel::gaussian(double gamma, Interval domain) {
  if (gamma <= 0.0) throw std::invalid_argument("Kernel: gamma must be positive");
  return Kernel(KernelFamily::Gaussian, gamma, 0, domain);
}

Kernel Kernel::laplace(double scale, Interval domain) {
  if (scale <= 0.0) throw std::invalid_argument("Kernel: scale must be positive");
  return Kernel(KernelFamily::Laplace, scale, 0, domain);
}

Kernel Kernel::polynomial(int degree, double offset, Interval domain) {
  if (degree < 1) throw std::invalid_argument("Kernel: degree must be >= 1");
  if (offset < 0.0) throw std::invalid_argument("Kernel: offset must be >= 0");
  return Kernel(KernelFamily::Polynomial, offset, degree, domain);
}

Kernel Kernel::with_lenient_domain() const {
  Kernel k = *this;
  k.lenient_ = true;
  return k;
}

double Kernel::check_point(double x) const {
  if (domain_.contains(x)) return x;
  if (lenient_) return domain_.clamp(x);
  throw std::out_of_range("Kernel: point out of domain");
}

double Kernel::operator()(double x, double y) const {
  x = check_point(x);
  y = check_point(y);
  switch (family_) {
    case KernelFamily::Gaussian:
      return std::exp(-param_ * (x - y) * (x - y));
    case KernelFamily::Laplace:
      return std::exp(-std::abs(x - y) / param_);
    case KernelFamily::Polynomial:
      return std::pow(x * y + param_, degree_);
  }
  return 0.0;
}

bool operator==(const Kernel& a, const Kernel& b) {
  return a.family_ == b.family_ && a.param_ == b.param_ &&
         a.degree_ == b.degree_ && a.domain_.lo == b.domain_.lo &&
         a.domain_.hi == b.domain_.hi;
}

Eigen::VectorXd Kernel::column(const Eigen::Ref<const Eigen::VectorXd>& pts,
                               double x) const {
  x = check_point(x);
  switch (family_) {
    case KernelFamily::Gaussian:
      return (-param_ * (pts.array() - x).square()).exp();
    case KernelFamily::Laplace:
      return (-(pts.array() - x).abs() / param_).exp();
    case KernelFamily::Polynomial:
      return (pts.array() * x + param_).pow(degree_);
  }
  return Eigen::VectorXd();
}

Eigen::MatrixXd gram(const Kernel& k,
                     const Eigen::Ref<const Eigen::VectorXd>& points) {
  const auto m = points.size();
  Eigen::MatrixXd g(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    g.col(j) = k.column(points, points(j));
  }
  // Symmetrize away rounding asymmetry from the vectorized evaluation.
  g = ((g + g.transpose()) / 2.0).eval();
  return g;
}

double sup_diag_bound(const Kernel& k) {
  switch (k.family()) {
    case KernelFamily::Gaussian:
    case KernelFamily::Laplace:
      return 1.0;
    case KernelFamily::Polynomial: {
      // (x^2 + c)^d is maximized at the endpoint of largest magnitude.
      const Interval d = k.domain();
      const double xm = std::abs(d.lo) > std::abs(d.hi) ? d.lo : d.hi;
      return k(xm, xm);
    }
  }
  return 1.0;
}

}  // namespace declearn
