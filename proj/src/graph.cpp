#include "declearn/graph.hpp"

#include <queue>
#include <stdexcept>

namespace declearn {

Graph::Graph(Eigen::MatrixXd weights) : weights_(std::move(weights)) {
  const auto n = weights_.rows();
  if (n == 0 || weights_.cols() != n) {
    throw std::invalid_argument("Graph: weight matrix must be square and nonempty");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (weights_(i, i) != 0.0) {
      throw std::invalid_argument("Graph: diagonal weights must be zero");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (weights_(i, j) < 0.0) {
        throw std::invalid_argument("Graph: weights must be nonnegative");
      }
      if (weights_(i, j) != weights_(j, i)) {
        throw std::invalid_argument("Graph: weight matrix must be symmetric");
      }
    }
  }
  neighbors_.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (weights_(i, j) > 0.0) {
        neighbors_[static_cast<std::size_t>(i)].push_back(static_cast<int>(j));
      }
    }
  }
}

Graph Graph::from_edges(
    int n_nodes, const std::vector<std::tuple<int, int, double>>& edges) {
  if (n_nodes <= 0) {
    throw std::invalid_argument("Graph: n_nodes must be positive");
  }
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n_nodes, n_nodes);
  for (const auto& [i, j, weight] : edges) {
    if (i < 0 || i >= n_nodes || j < 0 || j >= n_nodes) {
      throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    if (i == j) {
      throw std::invalid_argument("Graph: self-loops are not allowed");
    }
    w(i, j) = weight;
    w(j, i) = weight;
  }
  return Graph(std::move(w));
}

LaplacianMatrix::LaplacianMatrix(Eigen::MatrixXd entries)
    : entries_(std::move(entries)) {
  const auto n = entries_.rows();
  if (n == 0 || entries_.cols() != n) {
    throw std::invalid_argument("LaplacianMatrix: matrix must be square");
  }
  if (!entries_.isApprox(entries_.transpose(), 0.0)) {
    throw std::invalid_argument("LaplacianMatrix: matrix must be symmetric");
  }
  const Eigen::VectorXd row_sums = entries_.rowwise().sum();
  if (row_sums.cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("LaplacianMatrix: row sums must vanish");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(entries_,
                                                    Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw std::invalid_argument("LaplacianMatrix: matrix must be PSD");
  }
}

LaplacianMatrix laplacian(const Graph& g) {
  Eigen::MatrixXd l = -g.weights();
  l.diagonal() = g.weights().rowwise().sum();
  return LaplacianMatrix(std::move(l));
}

bool is_connected(const Graph& g) {
  const int n = g.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!frontier.empty()) {
    const int i = frontier.front();
    frontier.pop();
    for (int j : g.neighbors()[static_cast<std::size_t>(i)]) {
      if (!seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = 1;
        ++visited;
        frontier.push(j);
      }
    }
  }
  return visited == n;
}

double algebraic_connectivity(const Graph& g) {
  if (g.size() < 2) {
    throw std::invalid_argument("algebraic_connectivity: graph too small");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian(g).matrix(),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues()(1);
}

Eigen::MatrixXd kronecker_with_identity(const Eigen::MatrixXd& l, int n) {
  const auto big_n = l.rows() * n;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(big_n, big_n);
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    for (Eigen::Index j = 0; j < l.cols(); ++j) {
      if (l(i, j) != 0.0) {
        out.block(i * n, j * n, n, n) =
            l(i, j) * Eigen::MatrixXd::Identity(n, n);
      }
    }
  }
  return out;
}

}  // namespace declearn
