#pragma once

#include <Eigen/Dense>
#include <memory>
#include <utility>
#include <vector>

#include "declearn/kernel.hpp"

namespace declearn {

/// Finite kernel expansion f = sum_i c_i K(centers_i, .). Value type;
/// all operations are pure. Centers are kept sorted so that blending
/// expansions merges coincident centers in linear time.
class KernelExpansion {
 public:
  explicit KernelExpansion(Kernel kernel);  // the zero function
  KernelExpansion(Kernel kernel, Eigen::VectorXd centers,
                  Eigen::VectorXd coefficients);

  const Kernel& kernel() const { return kernel_; }
  const Eigen::VectorXd& centers() const { return centers_; }
  const Eigen::VectorXd& coefficients() const { return coefficients_; }
  Eigen::Index terms() const { return centers_.size(); }

  double evaluate(double x) const;

  /// sum_t scale_t * f_t as one expansion, merging centers closer than
  /// merge_tol. All terms must share the kernel.
  static KernelExpansion combine(
      const std::vector<std::pair<double, const KernelExpansion*>>& terms,
      double merge_tol = 1e-12);

 private:
  Kernel kernel_;
  Eigen::VectorXd centers_;
  Eigen::VectorXd coefficients_;
};

double evaluate(const KernelExpansion& f, double x);
double inner_product(const KernelExpansion& f, const KernelExpansion& g);
double rkhs_norm(const KernelExpansion& f);
KernelExpansion compact(const KernelExpansion& f, double tol = 1e-12);

KernelExpansion operator+(const KernelExpansion& f, const KernelExpansion& g);
KernelExpansion operator-(const KernelExpansion& f, const KernelExpansion& g);
KernelExpansion operator*(double scale, const KernelExpansion& f);

/// Function stored as values on a fixed strictly increasing grid, evaluated
/// off-grid by a natural cubic spline. The spline table is computed once at
/// construction; the object is immutable afterwards. The grid is shared
/// between instances, so copies are cheap.
class GridFunction {
 public:
  using GridPtr = std::shared_ptr<const Eigen::VectorXd>;

  GridFunction(Kernel kernel, GridPtr grid, Eigen::VectorXd values);
  GridFunction(Kernel kernel, Eigen::VectorXd grid, Eigen::VectorXd values);

  static GridFunction zero(Kernel kernel, GridPtr grid);

  const Kernel& kernel() const { return kernel_; }
  const Eigen::VectorXd& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  const Eigen::VectorXd& values() const { return values_; }

  /// Exact table lookup on a knot, natural cubic spline in between;
  /// refuses to extrapolate outside [grid.first, grid.last].
  double interpolate(double x) const;

  bool same_grid(const GridFunction& other) const;

 private:
  Kernel kernel_;
  GridPtr grid_;
  Eigen::VectorXd values_;
  Eigen::VectorXd second_derivs_;
};

double interpolate(const GridFunction& f, double x);

GridFunction expansion_to_grid(const KernelExpansion& f,
                               GridFunction::GridPtr grid);
GridFunction expansion_to_grid(const KernelExpansion& f,
                               const Eigen::VectorXd& grid);

struct ErrorMetrics {
  double sup;
  double rmse;
};

ErrorMetrics grid_error_metrics(const GridFunction& f, const GridFunction& g);

}  // namespace declearn
