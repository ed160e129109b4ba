#include "tokenlap/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tokenlap/error.hpp"

namespace tokenlap {

Graph::Graph(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw InvalidArgument("graph order " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxOrder) + "]");
  }
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nu = adj_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

void Graph::add_edge(int u, int v) {
  const int n = order();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw InvalidArgument("edge endpoint out of range");
  }
  if (u == v) throw InvalidArgument("loops are not allowed");
  auto insert = [](std::vector<int>& list, int x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) return false;
    list.insert(it, x);
    return true;
  };
  if (insert(adj_[u], v)) {
    insert(adj_[v], u);
    ++edge_count_;
  }
}

std::uint64_t Graph::neighbor_mask(int v) const {
  if (order() > 64) throw InvalidArgument("neighbor_mask requires order <= 64");
  std::uint64_t mask = 0;
  for (int w : adj_.at(v)) mask |= std::uint64_t{1} << w;
  return mask;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    const auto& nu = g.neighbors(u);
    auto it = nu.begin();
    for (int v = u + 1; v < n; ++v) {
      while (it != nu.end() && *it < v) ++it;
      if (it == nu.end() || *it != v) out.add_edge(u, v);
    }
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> blocks;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(blocks.size());
    blocks.emplace_back();
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      blocks[id].push_back(u);
      for (int v : g.neighbors(u)) {
        if (label[v] < 0) {
          label[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(blocks[id].begin(), blocks[id].end());
  }
  return blocks;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) os << ',';
    os << '{' << u + 1 << ',' << v + 1 << '}';
    first = false;
  }
  return os.str();
}

}  // namespace tokenlap
