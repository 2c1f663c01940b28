#include "declearn/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace declearn {

namespace {

void require_same_kernel(const Kernel& a, const Kernel& b) {
  if (!(a == b)) throw std::invalid_argument("kernel mismatch");
}

}  // namespace

KernelExpansion::KernelExpansion(Kernel kernel) : kernel_(std::move(kernel)) {}

KernelExpansion::KernelExpansion(Kernel kernel, Eigen::VectorXd centers,
                                 Eigen::VectorXd coefficients)
    : kernel_(std::move(kernel)),
      centers_(std::move(centers)),
      coefficients_(std::move(coefficients)) {
  if (centers_.size() != coefficients_.size()) {
    throw std::invalid_argument(
        "KernelExpansion: centers and coefficients must have equal length");
  }
  for (Eigen::Index i = 0; i < centers_.size(); ++i) {
    kernel_.check_point(centers_(i));
  }
  if (!std::is_sorted(centers_.begin(), centers_.end())) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(centers_.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      return centers_(a) < centers_(b);
    });
    Eigen::VectorXd c(centers_.size()), w(centers_.size());
    for (Eigen::Index i = 0; i < centers_.size(); ++i) {
      c(i) = centers_(order[static_cast<std::size_t>(i)]);
      w(i) = coefficients_(order[static_cast<std::size_t>(i)]);
    }
    centers_ = std::move(c);
    coefficients_ = std::move(w);
  }
}

double KernelExpansion::evaluate(double x) const {
  if (terms() == 0) {
    kernel_.check_point(x);
    return 0.0;
  }
  return coefficients_.dot(kernel_.column(centers_, x));
}

KernelExpansion KernelExpansion::combine(
    const std::vector<std::pair<double, const KernelExpansion*>>& terms,
    double merge_tol) {
  if (terms.empty()) {
    throw std::invalid_argument("KernelExpansion::combine: no terms");
  }
  const Kernel& kernel = terms.front().second->kernel();
  Eigen::Index total = 0;
  for (const auto& [scale, f] : terms) {
    require_same_kernel(kernel, f->kernel());
    total += f->terms();
  }
  // k-way merge of the sorted center lists.
  std::vector<Eigen::Index> pos(terms.size(), 0);
  Eigen::VectorXd centers(total), coeffs(total);
  Eigen::Index out = 0;
  while (true) {
    int best = -1;
    double best_center = 0.0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const auto& f = *terms[t].second;
      if (pos[t] < f.terms()) {
        const double c = f.centers()(pos[t]);
        if (best < 0 || c < best_center) {
          best = static_cast<int>(t);
          best_center = c;
        }
      }
    }
    if (best < 0) break;
    const double coeff =
        terms[static_cast<std::size_t>(best)].first *
        terms[static_cast<std::size_t>(best)].second->coefficients()(
            pos[static_cast<std::size_t>(best)]);
    ++pos[static_cast<std::size_t>(best)];
    if (out > 0 && best_center - centers(out - 1) <= merge_tol) {
      coeffs(out - 1) += coeff;
    } else {
      centers(out) = best_center;
      coeffs(out) = coeff;
      ++out;
    }
  }
  return KernelExpansion(kernel, centers.head(out), coeffs.head(out));
}

double evaluate(const KernelExpansion& f, double x) { return f.evaluate(x); }

double inner_product(const KernelExpansion& f, const KernelExpansion& g) {
  require_same_kernel(f.kernel(), g.kernel());
  if (f.terms() == 0 || g.terms() == 0) return 0.0;
  // c^T G d accumulated one column at a time; no Gram matrix is stored so
  // large online expansions stay cheap.
  double acc = 0.0;
  for (Eigen::Index j = 0; j < g.terms(); ++j) {
    acc += g.coefficients()(j) *
           f.coefficients().dot(f.kernel().column(f.centers(), g.centers()(j)));
  }
  return acc;
}

double rkhs_norm(const KernelExpansion& f) {
  return std::sqrt(std::max(inner_product(f, f), 0.0));
}

KernelExpansion compact(const KernelExpansion& f, double tol) {
  return KernelExpansion::combine({{1.0, &f}}, tol);
}

KernelExpansion operator+(const KernelExpansion& f, const KernelExpansion& g) {
  return KernelExpansion::combine({{1.0, &f}, {1.0, &g}});
}

KernelExpansion operator-(const KernelExpansion& f, const KernelExpansion& g) {
  return KernelExpansion::combine({{1.0, &f}, {-1.0, &g}});
}

KernelExpansion operator*(double scale, const KernelExpansion& f) {
  return KernelExpansion::combine({{scale, &f}});
}

GridFunction::GridFunction(Kernel kernel, GridPtr grid, Eigen::VectorXd values)
    : kernel_(std::move(kernel)),
      grid_(std::move(grid)),
      values_(std::move(values)) {
  const auto& z = *grid_;
  const auto n = z.size();
  if (n < 4) {
    throw std::invalid_argument("GridFunction: grid needs at least 4 knots");
  }
  if (values_.size() != n) {
    throw std::invalid_argument("GridFunction: grid/value length mismatch");
  }
  for (Eigen::Index l = 0; l + 1 < n; ++l) {
    if (!(z(l) < z(l + 1))) {
      throw std::invalid_argument("GridFunction: grid must be strictly increasing");
    }
  }
  kernel_.check_point(z(0));
  kernel_.check_point(z(n - 1));

  // Natural cubic spline second derivatives: tridiagonal solve with
  // sigma_0 = sigma_{n-1} = 0 (Thomas algorithm).
  second_derivs_ = Eigen::VectorXd::Zero(n);
  const auto m = n - 2;
  if (m > 0) {
    Eigen::VectorXd diag(m), upper(m), rhs(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const double h0 = z(i + 1) - z(i);
      const double h1 = z(i + 2) - z(i + 1);
      diag(i) = (h0 + h1) / 3.0;
      upper(i) = h1 / 6.0;
      rhs(i) = (values_(i + 2) - values_(i + 1)) / h1 -
               (values_(i + 1) - values_(i)) / h0;
    }
    for (Eigen::Index i = 1; i < m; ++i) {
      const double lower = (z(i + 1) - z(i)) / 6.0;
      const double w = lower / diag(i - 1);
      diag(i) -= w * upper(i - 1);
      rhs(i) -= w * rhs(i - 1);
    }
    second_derivs_(m) = rhs(m - 1) / diag(m - 1);
    for (Eigen::Index i = m - 1; i >= 1; --i) {
      second_derivs_(i) =
          (rhs(i - 1) - upper(i - 1) * second_derivs_(i + 1)) / diag(i - 1);
    }
  }
}

GridFunction::GridFunction(Kernel kernel, Eigen::VectorXd grid,
                           Eigen::VectorXd values)
    : GridFunction(std::move(kernel),
                   std::make_shared<const Eigen::VectorXd>(std::move(grid)),
                   std::move(values)) {}

GridFunction GridFunction::zero(Kernel kernel, GridPtr grid) {
  Eigen::VectorXd values = Eigen::VectorXd::Zero(grid->size());
  return GridFunction(std::move(kernel), std::move(grid), std::move(values));
}

double GridFunction::interpolate(double x) const {
  const auto& z = *grid_;
  const auto n = z.size();
  if (x < z(0) || x > z(n - 1)) {
    throw std::out_of_range("GridFunction: extrapolation refused");
  }
  const double* begin = z.data();
  auto j = static_cast<Eigen::Index>(
               std::upper_bound(begin, begin + n, x) - begin) -
           1;
  if (j < 0) j = 0;
  if (j >= n - 1) j = n - 2;
  if (x == z(j)) return values_(j);
  if (x == z(j + 1)) return values_(j + 1);
  const double h = z(j + 1) - z(j);
  const double a = (z(j + 1) - x) / h;
  const double b = 1.0 - a;
  return a * values_(j) + b * values_(j + 1) +
         ((a * a * a - a) * second_derivs_(j) +
          (b * b * b - b) * second_derivs_(j + 1)) *
             h * h / 6.0;
}

bool GridFunction::same_grid(const GridFunction& other) const {
  if (grid_ == other.grid_) return true;
  return grid_->size() == other.grid_->size() && *grid_ == *other.grid_;
}

double interpolate(const GridFunction& f, double x) { return f.interpolate(x); }

GridFunction expansion_to_grid(const KernelExpansion& f,
                               GridFunction::GridPtr grid) {
  Eigen::VectorXd values = Eigen::VectorXd::Zero(grid->size());
  for (Eigen::Index i = 0; i < f.terms(); ++i) {
    values += f.coefficients()(i) * f.kernel().column(*grid, f.centers()(i));
  }
  return GridFunction(f.kernel(), std::move(grid), std::move(values));
}

GridFunction expansion_to_grid(const KernelExpansion& f,
                               const Eigen::VectorXd& grid) {
  return expansion_to_grid(f, std::make_shared<const Eigen::VectorXd>(grid));
}

ErrorMetrics grid_error_metrics(const GridFunction& f, const GridFunction& g) {
  if (!f.same_grid(g)) {
    throw std::invalid_argument("grid_error_metrics: grid mismatch");
  }
  const Eigen::ArrayXd diff = (f.values() - g.values()).array().abs();
  return ErrorMetrics{diff.maxCoeff(), std::sqrt(diff.square().mean())};
}

}  // namespace declearn
