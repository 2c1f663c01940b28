#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "declearn/funcspace.hpp"
#include "declearn/gains.hpp"
#include "declearn/graph.hpp"
#include "declearn/rng.hpp"

namespace declearn {

/// All N node estimates at one instant, plus the step counter. Estimate is
/// KernelExpansion, GridFunction, or Eigen::VectorXd (finite-dimensional
/// mode); every node must use the same representation.
template <class Estimate>
struct NetworkState {
  long step = 0;
  std::vector<Estimate> estimates;
};

struct Observation {
  double x;
  double y;
};

/// One node's consensus+innovations update
///   f' = f + a (y - f(x)) K_x + b sum_j w_j (f_j - f),
/// reading neighbor estimates frozen at the current step.
KernelExpansion rkhs_node_update(
    const KernelExpansion& f,
    const std::vector<std::pair<double, const KernelExpansion*>>& neighbors,
    double x, double y, double a, double b);

/// Grid form: per knot z_l,
///   f'(z_l) = f(z_l) + a (y - f(x)) K(x, z_l) + b sum_j w_j (f_j(z_l) - f(z_l)),
/// with f(x) by table lookup on a knot and cubic spline otherwise.
GridFunction rkhs_node_update(
    const GridFunction& f,
    const std::vector<std::pair<double, const GridFunction*>>& neighbors,
    double x, double y, double a, double b);

/// Synchronous network step: every node's innovation and consensus sum read
/// the step-k state; the returned state has the counter advanced.
template <class Estimate>
NetworkState<Estimate> network_step(const NetworkState<Estimate>& state,
                                    const Graph& g, const GainSchedule& gains,
                                    const std::vector<Observation>& observations);

/// Finite-dimensional ground truth plus the per-node random observation
/// matrix sampler H_i(k); sampler output shape must be fixed per node.
struct FiniteDimModel {
  int dim;
  Eigen::VectorXd truth;
  std::function<Eigen::MatrixXd(int node, long step, CounterRng&)> sampler;
};

/// Per-node update f_i' = f_i + a H_i^T (y_i - H_i f_i) + b sum_j w_ij (f_j - f_i)
/// with y_i = H_i f0 + v_i formed internally from the model and noise.
NetworkState<Eigen::VectorXd> finite_dim_step(
    const NetworkState<Eigen::VectorXd>& state, const Graph& g,
    const GainSchedule& gains, const FiniteDimModel& model,
    const std::vector<Eigen::VectorXd>& noise, CounterRng& rng);

/// Direct iteration of the stacked error recursion
///   e(k+1) = (I - a(k) H^T H - b(k) L (x) I) e(k) + a(k) H^T v(k)
/// on R^{N n}, for cross-checking a paired finite_dim_step run that consumed
/// the same operator and noise samples. Returns e(0..steps).
std::vector<Eigen::VectorXd> error_recursion_trajectory(
    const FiniteDimModel& model, const Graph& g, const GainSchedule& gains,
    const Eigen::VectorXd& e0,
    const std::vector<std::vector<Eigen::VectorXd>>& noise,
    const std::vector<std::vector<Eigen::MatrixXd>>& operators);

/// One draw of the network observation operators and measurements, used by
/// the empirical loss below.
struct FiniteDimSample {
  std::vector<Eigen::MatrixXd> observation;  // H_i
  std::vector<Eigen::VectorXd> measurement;  // y_i
};

/// Empirical Laplacian-regularized loss
///   J(f) = 1/2 ( mean_s ||y_s - H_s f||^2 + <(L (x) I) f, f> )
/// on the stacked estimate; the quadratic term equals
/// 1/2 sum_ij w_ij ||f_i - f_j||^2.
double laplacian_loss(const Eigen::VectorXd& stacked, const Graph& g,
                      std::span<const FiniteDimSample> samples);

/// grad J(f) = -mean_s H_s^T (y_s - H_s f) + (L (x) I) f.
Eigen::VectorXd laplacian_loss_gradient(const Eigen::VectorXd& stacked,
                                        const Graph& g,
                                        std::span<const FiniteDimSample> samples);

}  // namespace declearn
