#pragma once

#include <cstdint>
#include <vector>

#include "tokenlap/combinatorics.hpp"
#include "tokenlap/graph.hpp"
#include "tokenlap/sparse_int_matrix.hpp"

namespace tokenlap {

/// Largest C(n,k) for which the token graph is built explicitly.
inline constexpr std::int64_t kTokenGraphCap = 20000;

/// The k-token graph of `base`: vertex i is the k-subset index.unrank(i), and
/// two subsets are adjacent when their symmetric difference is an edge of base.
struct TokenGraph {
  Graph base;
  int k;
  SubsetIndex index;
  Graph graph;
};

TokenGraph token_graph(const Graph& g, int k);

/// Subsets reachable from `a` by sliding one token along an edge of g to an
/// unoccupied vertex, in increasing rank order. Needs only the base graph.
std::vector<VertexSubset> token_neighbors(const Graph& g, VertexSubset a);
inline std::vector<VertexSubset> token_neighbors(const TokenGraph& tg, VertexSubset a) {
  return token_neighbors(tg.base, a);
}

SparseIntMatrix adjacency(const Graph& g);
SparseIntMatrix degree_matrix(const Graph& g);
SparseIntMatrix laplacian(const Graph& g);

/// Oriented vertex-edge incidence matrix, columns in g.edges() order. Edge
/// {u,v} with u < v points u -> v (+1 at u, -1 at v) unless reversed[e] is set.
SparseIntMatrix incidence_matrix(const Graph& g, const std::vector<bool>& reversed = {});

}  // namespace tokenlap
