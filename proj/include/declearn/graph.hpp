#pragma once

#include <Eigen/Dense>
#include <tuple>
#include <vector>

namespace declearn {

/// Weighted undirected graph. Weights are symmetric, nonnegative, with a
/// zero diagonal; an edge exists exactly where the weight is positive.
/// Immutable after construction, safe to share across threads.
class Graph {
 public:
  explicit Graph(Eigen::MatrixXd weights);

  /// Build from an explicit edge list with 0-based node indices.
  static Graph from_edges(
      int n_nodes, const std::vector<std::tuple<int, int, double>>& edges);

  int size() const { return static_cast<int>(weights_.rows()); }
  const Eigen::MatrixXd& weights() const { return weights_; }
  double weight(int i, int j) const { return weights_(i, j); }
  const std::vector<std::vector<int>>& neighbors() const { return neighbors_; }

 private:
  Eigen::MatrixXd weights_;
  std::vector<std::vector<int>> neighbors_;
};

/// Graph Laplacian D - A, validated on construction: symmetric, zero row
/// sums, positive semi-definite with the all-ones vector in its kernel.
class LaplacianMatrix {
 public:
  explicit LaplacianMatrix(Eigen::MatrixXd entries);
  const Eigen::MatrixXd& matrix() const { return entries_; }
  int size() const { return static_cast<int>(entries_.rows()); }

 private:
  Eigen::MatrixXd entries_;
};

LaplacianMatrix laplacian(const Graph& g);

/// True iff every node is reachable over strictly-positive-weight edges.
bool is_connected(const Graph& g);

/// Second-smallest Laplacian eigenvalue; throws for graphs with n < 2.
double algebraic_connectivity(const Graph& g);

/// L (x) I_n acting on the stacked space R^{N n}, block (i,j) = L(i,j) I_n.
Eigen::MatrixXd kronecker_with_identity(const Eigen::MatrixXd& l, int n);

}  // namespace declearn
