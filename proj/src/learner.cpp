#include "declearn/learner.hpp"

#include <stdexcept>

namespace declearn {

namespace {

template <class Estimate>
std::vector<std::pair<double, const Estimate*>> neighbor_terms(
    const Graph& g, const std::vector<Estimate>& estimates, int node) {
  std::vector<std::pair<double, const Estimate*>> out;
  const auto& nbrs = g.neighbors()[static_cast<std::size_t>(node)];
  out.reserve(nbrs.size());
  for (int j : nbrs) {
    out.emplace_back(g.weight(node, j), &estimates[static_cast<std::size_t>(j)]);
  }
  return out;
}

}  // namespace

KernelExpansion rkhs_node_update(
    const KernelExpansion& f,
    const std::vector<std::pair<double, const KernelExpansion*>>& neighbors,
    double x, double y, double a, double b) {
  if (a < 0.0 || b < 0.0) {
    throw std::invalid_argument("rkhs_node_update: gains must be >= 0");
  }
  const double innovation = a * (y - f.evaluate(x));

  double weight_sum = 0.0;
  std::vector<std::pair<double, const KernelExpansion*>> terms;
  terms.reserve(neighbors.size() + 2);
  terms.emplace_back(1.0, &f);  // scale fixed up below
  for (const auto& [w, fj] : neighbors) {
    weight_sum += w;
    terms.emplace_back(b * w, fj);
  }
  terms.front().first = 1.0 - b * weight_sum;

  const Eigen::VectorXd center = Eigen::VectorXd::Constant(1, x);
  const Eigen::VectorXd coeff = Eigen::VectorXd::Constant(1, innovation);
  const KernelExpansion spike(f.kernel(), center, coeff);
  terms.emplace_back(1.0, &spike);
  return KernelExpansion::combine(terms);
}

GridFunction rkhs_node_update(
    const GridFunction& f,
    const std::vector<std::pair<double, const GridFunction*>>& neighbors,
    double x, double y, double a, double b) {
  if (a < 0.0 || b < 0.0) {
    throw std::invalid_argument("rkhs_node_update: gains must be >= 0");
  }
  const double innovation = a * (y - f.interpolate(x));
  Eigen::VectorXd values =
      f.values() + innovation * f.kernel().column(f.grid(), x);
  for (const auto& [w, fj] : neighbors) {
    if (!(fj->kernel() == f.kernel()) || !f.same_grid(*fj)) {
      throw std::invalid_argument("rkhs_node_update: representation mismatch");
    }
    values += (b * w) * (fj->values() - f.values());
  }
  return GridFunction(f.kernel(), f.grid_ptr(), std::move(values));
}

template <class Estimate>
NetworkState<Estimate> network_step(const NetworkState<Estimate>& state,
                                    const Graph& g, const GainSchedule& gains,
                                    const std::vector<Observation>& observations) {
  const int n = g.size();
  if (static_cast<int>(state.estimates.size()) != n ||
      static_cast<int>(observations.size()) != n) {
    throw std::invalid_argument("network_step: length mismatch");
  }
  const double a = gains.a(state.step);
  const double b = gains.b(state.step);
  NetworkState<Estimate> next;
  next.step = state.step + 1;
  next.estimates.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto terms = neighbor_terms(g, state.estimates, i);
    next.estimates.push_back(
        rkhs_node_update(state.estimates[static_cast<std::size_t>(i)], terms,
                         observations[static_cast<std::size_t>(i)].x,
                         observations[static_cast<std::size_t>(i)].y, a, b));
  }
  return next;
}

template NetworkState<KernelExpansion> network_step(
    const NetworkState<KernelExpansion>&, const Graph&, const GainSchedule&,
    const std::vector<Observation>&);
template NetworkState<GridFunction> network_step(
    const NetworkState<GridFunction>&, const Graph&, const GainSchedule&,
    const std::vector<Observation>&);

NetworkState<Eigen::VectorXd> finite_dim_step(
    const NetworkState<Eigen::VectorXd>& state, const Graph& g,
    const GainSchedule& gains, const FiniteDimModel& model,
    const std::vector<Eigen::VectorXd>& noise, CounterRng& rng) {
  const int n = g.size();
  if (static_cast<int>(state.estimates.size()) != n ||
      static_cast<int>(noise.size()) != n) {
    throw std::invalid_argument("finite_dim_step: length mismatch");
  }
  const double a = gains.a(state.step);
  const double b = gains.b(state.step);
  NetworkState<Eigen::VectorXd> next;
  next.step = state.step + 1;
  next.estimates.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd& fi = state.estimates[static_cast<std::size_t>(i)];
    if (fi.size() != model.dim) {
      throw std::invalid_argument("finite_dim_step: dimension mismatch");
    }
    const Eigen::MatrixXd h = model.sampler(i, state.step, rng);
    if (h.cols() != model.dim) {
      throw std::invalid_argument("finite_dim_step: sampler dimension mismatch");
    }
    const Eigen::VectorXd& v = noise[static_cast<std::size_t>(i)];
    if (v.size() != h.rows()) {
      throw std::invalid_argument("finite_dim_step: noise dimension mismatch");
    }
    const Eigen::VectorXd y = h * model.truth + v;
    Eigen::VectorXd updated = fi + a * (h.transpose() * (y - h * fi));
    for (int j : g.neighbors()[static_cast<std::size_t>(i)]) {
      updated += (b * g.weight(i, j)) *
                 (state.estimates[static_cast<std::size_t>(j)] - fi);
    }
    next.estimates.push_back(std::move(updated));
  }
  return next;
}

std::vector<Eigen::VectorXd> error_recursion_trajectory(
    const FiniteDimModel& model, const Graph& g, const GainSchedule& gains,
    const Eigen::VectorXd& e0,
    const std::vector<std::vector<Eigen::VectorXd>>& noise,
    const std::vector<std::vector<Eigen::MatrixXd>>& operators) {
  const int n = g.size();
  const int dim = model.dim;
  if (e0.size() != static_cast<Eigen::Index>(n) * dim) {
    throw std::invalid_argument("error_recursion_trajectory: e0 dimension mismatch");
  }
  if (noise.size() != operators.size()) {
    throw std::invalid_argument("error_recursion_trajectory: sample length mismatch");
  }
  const Eigen::MatrixXd lap_lift =
      kronecker_with_identity(laplacian(g).matrix(), dim);
  const Eigen::MatrixXd identity =
      Eigen::MatrixXd::Identity(lap_lift.rows(), lap_lift.cols());

  std::vector<Eigen::VectorXd> trajectory;
  trajectory.reserve(noise.size() + 1);
  trajectory.push_back(e0);
  Eigen::VectorXd e = e0;
  for (std::size_t k = 0; k < noise.size(); ++k) {
    if (static_cast<int>(noise[k].size()) != n ||
        static_cast<int>(operators[k].size()) != n) {
      throw std::invalid_argument("error_recursion_trajectory: per-step length mismatch");
    }
    const double a = gains.a(static_cast<long>(k));
    const double b = gains.b(static_cast<long>(k));
    // H^T H is block diagonal, H^T v is blockwise.
    Eigen::MatrixXd transition = identity - b * lap_lift;
    Eigen::VectorXd drive = Eigen::VectorXd::Zero(e.size());
    for (int i = 0; i < n; ++i) {
      const Eigen::MatrixXd& h = operators[k][static_cast<std::size_t>(i)];
      if (h.cols() != dim) {
        throw std::invalid_argument("error_recursion_trajectory: operator dimension mismatch");
      }
      transition.block(i * dim, i * dim, dim, dim) -=
          a * (h.transpose() * h);
      drive.segment(i * dim, dim) =
          a * (h.transpose() * noise[k][static_cast<std::size_t>(i)]);
    }
    e = (transition * e + drive).eval();
    trajectory.push_back(e);
  }
  return trajectory;
}

namespace {

void check_samples(const Eigen::VectorXd& stacked, const Graph& g,
                   std::span<const FiniteDimSample> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("laplacian_loss: empty sample set");
  }
  const int n = g.size();
  for (const auto& s : samples) {
    if (static_cast<int>(s.observation.size()) != n ||
        static_cast<int>(s.measurement.size()) != n) {
      throw std::invalid_argument("laplacian_loss: sample length mismatch");
    }
  }
  if (stacked.size() % n != 0) {
    throw std::invalid_argument("laplacian_loss: stacked dimension mismatch");
  }
}

}  // namespace

double laplacian_loss(const Eigen::VectorXd& stacked, const Graph& g,
                      std::span<const FiniteDimSample> samples) {
  check_samples(stacked, g, samples);
  const int n = g.size();
  const int dim = static_cast<int>(stacked.size()) / n;
  double fit = 0.0;
  for (const auto& s : samples) {
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd r =
          s.measurement[static_cast<std::size_t>(i)] -
          s.observation[static_cast<std::size_t>(i)] * stacked.segment(i * dim, dim);
      fit += r.squaredNorm();
    }
  }
  fit /= static_cast<double>(samples.size());

  double quad = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j : g.neighbors()[static_cast<std::size_t>(i)]) {
      quad += 0.5 * g.weight(i, j) *
              (stacked.segment(i * dim, dim) - stacked.segment(j * dim, dim))
                  .squaredNorm();
    }
  }
  return 0.5 * (fit + quad);
}

Eigen::VectorXd laplacian_loss_gradient(const Eigen::VectorXd& stacked,
                                        const Graph& g,
                                        std::span<const FiniteDimSample> samples) {
  check_samples(stacked, g, samples);
  const int n = g.size();
  const int dim = static_cast<int>(stacked.size()) / n;
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(stacked.size());
  for (const auto& s : samples) {
    for (int i = 0; i < n; ++i) {
      const auto& h = s.observation[static_cast<std::size_t>(i)];
      const Eigen::VectorXd r = s.measurement[static_cast<std::size_t>(i)] -
                                h * stacked.segment(i * dim, dim);
      grad.segment(i * dim, dim) -= h.transpose() * r;
    }
  }
  grad /= static_cast<double>(samples.size());
  for (int i = 0; i < n; ++i) {
    for (int j : g.neighbors()[static_cast<std::size_t>(i)]) {
      grad.segment(i * dim, dim) +=
          g.weight(i, j) *
          (stacked.segment(i * dim, dim) - stacked.segment(j * dim, dim));
    }
  }
  return grad;
}

}  // namespace declearn
