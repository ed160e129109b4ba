#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tokenlap {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1 (reported as 1..n).
///
/// Neighbor lists are kept sorted, so two graphs compare equal exactly when
/// they have the same order and edge set.
class Graph {
 public:
  static constexpr int kMaxOrder = 20000;

  explicit Graph(int n = 1);
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_edge(int u, int v) const;
  /// Adds {u,v}; loops are rejected, repeated edges are ignored.
  void add_edge(int u, int v);

  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  /// Neighbors of v as a bitmask; only valid for order() <= 64.
  std::uint64_t neighbor_mask(int v) const;

  /// Edges {u,v} with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

Graph complement(const Graph& g);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Human-readable edge list with 1-based labels, e.g. "{1,2},{2,3}".
std::string edge_list_string(const Graph& g);

}  // namespace tokenlap
