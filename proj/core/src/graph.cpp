#include "kc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kc {

Digraph Digraph::from_adjacency(const Mat& a) {
  if (!a.square()) throw std::invalid_argument("Digraph: adjacency matrix must be square");
  const int n = a.rows();
  Digraph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n) * n, 0);
  g.edge_index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = a(i, j);
      if (v != 0.0 && v != 1.0)
        throw std::invalid_argument("Digraph: adjacency entries must be 0 or 1 (at " +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      if (v == 1.0) {
        if (i == j)
          throw std::invalid_argument("Digraph: self-loop at node " + std::to_string(i));
        g.adj_[g.flat(i, j)] = 1;
        g.edge_index_[g.flat(i, j)] = static_cast<int>(g.edges_.size());
        g.edges_.push_back({i, j});
      }
    }
  }
  return g;
}

Digraph Digraph::from_adjacency(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw std::invalid_argument("Digraph: adjacency matrix must be square");
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<double>(a[i][j]);
  }
  return from_adjacency(m);
}

int Digraph::in_degree(int i) const {
  int d = 0;
  for (int j = 0; j < n_; ++j) d += adj_[flat(i, j)];
  return d;
}

Partition Partition::of(int node_count, std::vector<std::vector<int>> clusters,
                        std::vector<int> representatives) {
  if (clusters.size() < 2)
    throw std::invalid_argument("Partition: need at least two clusters");
  Partition p;
  p.n_ = node_count;
  p.cluster_of_.assign(node_count, -1);
  p.is_rep_.assign(node_count, 0);
  for (int s = 0; s < static_cast<int>(clusters.size()); ++s) {
    if (clusters[s].empty())
      throw std::invalid_argument("Partition: cluster " + std::to_string(s) + " is empty");
    for (int node : clusters[s]) {
      if (node < 0 || node >= node_count)
        throw std::invalid_argument("Partition: node id " + std::to_string(node) +
                                    " out of range");
      if (p.cluster_of_[node] != -1)
        throw std::invalid_argument("Partition: node " + std::to_string(node) +
                                    " appears in more than one cluster");
      p.cluster_of_[node] = s;
    }
  }
  for (int node = 0; node < node_count; ++node)
    if (p.cluster_of_[node] == -1)
      throw std::invalid_argument("Partition: node " + std::to_string(node) +
                                  " not covered by any cluster");

  if (representatives.empty()) {
    representatives.reserve(clusters.size());
    for (const auto& c : clusters) representatives.push_back(c.back());
  }
  if (representatives.size() != clusters.size())
    throw std::invalid_argument("Partition: need one representative per cluster");
  for (int s = 0; s < static_cast<int>(clusters.size()); ++s) {
    const int rep = representatives[s];
    if (rep < 0 || rep >= node_count || p.cluster_of_[rep] != s)
      throw std::invalid_argument("Partition: representative " + std::to_string(rep) +
                                  " is not a member of cluster " + std::to_string(s));
    p.is_rep_[rep] = 1;
  }
  p.clusters_ = std::move(clusters);
  p.representatives_ = std::move(representatives);
  return p;
}

ResidualMatrices residual_matrices(const Digraph& g, const Partition& p, int s,
                                   int representative) {
  const auto& nodes = p.cluster(s);
  const int ns = static_cast<int>(nodes.size());
  const int rep = representative < 0 ? p.representative(s) : representative;

  const auto pos = std::find(nodes.begin(), nodes.end(), rep);
  if (pos == nodes.end())
    throw std::invalid_argument("residual_matrices: representative " + std::to_string(rep) +
                                " is not a member of cluster " + std::to_string(s));
  const int k = static_cast<int>(pos - nodes.begin());

  ResidualMatrices r;
  r.a = Mat(ns, ns);
  r.d = Mat(ns, ns);
  for (int u = 0; u < ns; ++u) {
    int deg = 0;
    for (int v = 0; v < ns; ++v) {
      const int a_uv = g.has_edge(nodes[u], nodes[v]) ? 1 : 0;
      r.a(u, v) = a_uv;
      deg += a_uv;
    }
    r.d(u, u) = deg;
  }
  if (ns == 1) return r;  // reduced matrices stay 0x0

  r.a_minus = remove_row_col(r.a, k);
  r.d_minus = remove_row_col(r.d, k);
  // Subtract the representative's (reduced) row from every row of A_s^-.
  r.a_tilde = r.a_minus;
  for (int u = 0, col = 0; u < ns; ++u) {
    if (u == k) continue;
    const double rep_row = r.a(k, u);
    for (int row = 0; row < ns - 1; ++row) r.a_tilde(row, col) -= rep_row;
    ++col;
  }
  return r;
}

Cardinalities cluster_cardinalities(const Digraph& g, const Partition& p) {
  const int m = p.cluster_count();
  Cardinalities c;
  c.c_sr.assign(m, std::vector<int>(m, 0));
  for (const Edge& e : g.edges()) {
    const int s = p.cluster_of(e.i);
    const int r = p.cluster_of(e.j);
    if (s == r)
      ++c.c_in;
    else
      ++c.c_out;
  }
  for (int s = 0; s < m; ++s) {
    const int rep = p.representative(s);
    for (int r = 0; r < m; ++r) {
      if (r == s) continue;
      int deg = 0;
      for (int j : p.cluster(r)) deg += g.has_edge(rep, j) ? 1 : 0;
      c.c_sr[s][r] = deg;
    }
  }
  for (int s = 0; s < m; ++s) {
    int total = 0;
    for (int r = 0; r < m; ++r)
      if (r != s) total += c.c_sr[s][r];
    c.c_max = std::max(c.c_max, total);
  }
  return c;
}

ClusterStructure analyze_structure(const Digraph& g, const Partition& p) {
  ClusterStructure st;
  st.cards = cluster_cardinalities(g, p);
  st.residual.reserve(p.cluster_count());
  for (int s = 0; s < p.cluster_count(); ++s)
    st.residual.push_back(residual_matrices(g, p, s));
  return st;
}

}  // namespace kc
