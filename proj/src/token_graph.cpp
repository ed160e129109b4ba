#include "tokenlap/token_graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "tokenlap/error.hpp"

namespace tokenlap {

TokenGraph token_graph(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k > n - 1) {
    throw InvalidArgument("token count k=" + std::to_string(k) + " outside [1, " +
                          std::to_string(n - 1) + "]");
  }
  if (n > 64) throw InvalidArgument("token graphs need a base graph of order <= 64");
  const std::int64_t size = binom(n, k);
  if (size > kTokenGraphCap) {
    throw CapExceeded("token graph would have C(" + std::to_string(n) + "," + std::to_string(k) +
                      ") = " + std::to_string(size) + " vertices, above the cap of " +
                      std::to_string(kTokenGraphCap));
  }

  SubsetIndex index(n, k);
  Graph fk(static_cast<int>(size));
  const auto subsets = index.subsets();
  for (std::int64_t i = 0; i < size; ++i) {
    for (VertexSubset b : token_neighbors(g, subsets[i])) {
      const std::int64_t j = index.rank(b);
      if (i < j) fk.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return TokenGraph{g, k, std::move(index), std::move(fk)};
}

std::vector<VertexSubset> token_neighbors(const Graph& g, VertexSubset a) {
  const int n = g.order();
  if (n > 64) throw InvalidArgument("token moves need a base graph of order <= 64");
  const std::uint64_t universe = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if ((a.bits & ~universe) != 0) throw InvalidArgument("subset element outside the base graph");
  std::vector<VertexSubset> out;
  for (int t : a.elements()) {
    const std::uint64_t free_targets = g.neighbor_mask(t) & ~a.bits;
    for (std::uint64_t m = free_targets; m != 0; m &= m - 1) {
      out.push_back(a.without(t).with(std::countr_zero(m)));
    }
  }
  // Lex rank order on equal-size subsets is the order of reversed bit strings.
  std::sort(out.begin(), out.end(), [](VertexSubset x, VertexSubset y) {
    const std::uint64_t diff = x.bits ^ y.bits;
    const std::uint64_t lowest = diff & (~diff + 1);
    return (x.bits & lowest) != 0;
  });
  return out;
}

SparseIntMatrix adjacency(const Graph& g) {
  SparseIntMatrix::Builder b(g.order(), g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) b.add(u, v, 1);
  }
  return std::move(b).build();
}

SparseIntMatrix degree_matrix(const Graph& g) {
  SparseIntMatrix::Builder b(g.order(), g.order());
  for (int u = 0; u < g.order(); ++u) b.add(u, u, g.degree(u));
  return std::move(b).build();
}

SparseIntMatrix laplacian(const Graph& g) {
  SparseIntMatrix::Builder b(g.order(), g.order());
  for (int u = 0; u < g.order(); ++u) {
    b.add(u, u, g.degree(u));
    for (int v : g.neighbors(u)) b.add(u, v, -1);
  }
  return std::move(b).build();
}

SparseIntMatrix incidence_matrix(const Graph& g, const std::vector<bool>& reversed) {
  const auto edges = g.edges();
  if (!reversed.empty() && reversed.size() != edges.size()) {
    throw InvalidArgument("orientation vector length does not match the edge count");
  }
  SparseIntMatrix::Builder b(g.order(), static_cast<std::int64_t>(edges.size()));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const bool flip = !reversed.empty() && reversed[e];
    const auto [u, v] = edges[e];
    b.add(u, static_cast<std::int64_t>(e), flip ? -1 : 1);
    b.add(v, static_cast<std::int64_t>(e), flip ? 1 : -1);
  }
  return std::move(b).build();
}

}  // namespace tokenlap
