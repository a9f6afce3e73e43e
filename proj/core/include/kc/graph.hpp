#pragma once

#include <vector>

#include "kc/matrix.hpp"

namespace kc {

/// Directed edge (i, j): a_ij = 1, node j's phase drives node i.
struct Edge {
  int i = 0;
  int j = 0;
};

/// Immutable directed graph given by a 0/1 adjacency matrix without
/// self-loops. Edges are enumerated row-major (by i, then j); that order is
/// the canonical edge-list order used for coupling-strength vectors, CSV
/// columns and seeded initial conditions.
class Digraph {
 public:
  static Digraph from_adjacency(const Mat& a);
  static Digraph from_adjacency(const std::vector<std::vector<int>>& a);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int i, int j) const { return adj_[flat(i, j)] != 0; }
  /// Index into the edge list, or -1 if (i, j) is not an edge.
  int edge_index(int i, int j) const { return edge_index_[flat(i, j)]; }

  /// Number of in-edges of node i, i.e. the row sum of the adjacency matrix.
  int in_degree(int i) const;

 private:
  Digraph() = default;
  std::size_t flat(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<unsigned char> adj_;  // row-major 0/1
  std::vector<int> edge_index_;     // row-major, -1 for non-edges
  std::vector<Edge> edges_;
};

/// Ordered partition of the node set into m >= 2 disjoint, non-empty
/// clusters, each with a designated representative node. The representative
/// defaults to the last node listed in its cluster.
class Partition {
 public:
  static Partition of(int node_count, std::vector<std::vector<int>> clusters,
                      std::vector<int> representatives = {});

  Partition() = default;  // empty placeholder; m() == 0

  int cluster_count() const { return static_cast<int>(clusters_.size()); }
  int node_count() const { return n_; }
  const std::vector<int>& cluster(int s) const { return clusters_[s]; }
  int size_of(int s) const { return static_cast<int>(clusters_[s].size()); }
  int representative(int s) const { return representatives_[s]; }
  const std::vector<int>& representatives() const { return representatives_; }
  int cluster_of(int node) const { return cluster_of_[node]; }
  bool is_representative(int node) const { return is_rep_[node] != 0; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> clusters_;
  std::vector<int> representatives_;
  std::vector<int> cluster_of_;
  std::vector<unsigned char> is_rep_;
};

/// Intra-cluster structural matrices of one cluster, reduced with respect to
/// its representative node: the intra-cluster adjacency A_s, the reduction
/// A_s^- (representative row/column removed), the residual adjacency
/// A~_s = A_s^- - 1*(representative row of A_s, reduced), the in-degree
/// matrix D_s and its reduction D_s^-. For singleton clusters all reduced
/// matrices are 0x0.
struct ResidualMatrices {
  Mat a;        // n_s x n_s
  Mat a_minus;  // (n_s-1) x (n_s-1)
  Mat a_tilde;  // (n_s-1) x (n_s-1)
  Mat d;        // n_s x n_s diagonal
  Mat d_minus;  // (n_s-1) x (n_s-1) diagonal
};

/// `representative` overrides the partition's choice (used by the
/// representative-invariance probe); pass -1 to use the partition's.
ResidualMatrices residual_matrices(const Digraph& g, const Partition& p, int s,
                                   int representative = -1);

struct Cardinalities {
  int c_in = 0;   // edges with both endpoints in one cluster
  int c_out = 0;  // all other edges
  int c_max = 0;  // max over s of sum_{r != s} c_sr
  /// c_sr[s][r]: in-degree of cluster s's representative from cluster r
  /// (the common per-node value whenever the in-degree condition holds).
  std::vector<std::vector<int>> c_sr;
};

Cardinalities cluster_cardinalities(const Digraph& g, const Partition& p);

/// Everything the condition checkers need about (graph, partition):
/// cardinalities plus per-cluster residual matrices.
struct ClusterStructure {
  Cardinalities cards;
  std::vector<ResidualMatrices> residual;  // one entry per cluster
};

ClusterStructure analyze_structure(const Digraph& g, const Partition& p);

}  // namespace kc
