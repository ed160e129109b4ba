#include "tokenlap/identities.hpp"

#include <map>

#include "tokenlap/combinatorics.hpp"
#include "tokenlap/error.hpp"
#include "tokenlap/graph6.hpp"
#include "tokenlap/token_graph.hpp"

namespace tokenlap {
namespace {

std::string graph_id(const Graph& g) {
  return g.order() <= kGraph6MaxOrder ? write_graph6(g) : std::string{};
}

IdentityReport compare(std::string name, const Graph* g, int n, int h, int k,
                       const SparseIntMatrix& lhs, const SparseIntMatrix& rhs) {
  IdentityReport r;
  r.identity = std::move(name);
  r.n = n;
  r.h = h;
  r.k = k;
  if (g != nullptr) r.graph = graph_id(*g);
  r.discrepancy = first_difference(lhs, rhs);
  return r;
}

void require_levels(int n, int h, int k) {
  if (!(1 <= h && h <= k && k <= n - 1)) {
    throw InvalidArgument("identity requires 1 <= h <= k <= n-1 (got n=" + std::to_string(n) +
                          ", h=" + std::to_string(h) + ", k=" + std::to_string(k) + ")");
  }
}

SparseIntMatrix token_laplacian(const Graph& g, int k) { return laplacian(token_graph(g, k).graph); }

}  // namespace

IdentityReport verify_gram(int n, int k) {
  require_levels(n, 1, k);
  const SparseIntMatrix b = inclusion_matrix(n, k, 1);
  const SparseIntMatrix rhs = SparseIntMatrix::identity(n).scaled(binom(n - 2, k - 1)) +
                              SparseIntMatrix::ones(n, n).scaled(binom(n - 2, k - 2));
  return compare("gram", nullptr, n, 1, k, b.transpose() * b, rhs);
}

IdentityReport verify_intertwining(const Graph& g, int h, int k) {
  const int n = g.order();
  require_levels(n, h, k);
  const SparseIntMatrix b = inclusion_matrix(n, k, h);
  return compare("intertwining", &g, n, h, k, b * token_laplacian(g, h),
                 token_laplacian(g, k) * b);
}

IdentityReport verify_projection(const Graph& g, int k) {
  const int n = g.order();
  require_levels(n, 1, k);
  const SparseIntMatrix b = inclusion_matrix(n, k, 1);
  return compare("projection", &g, n, 1, k, b.transpose() * token_laplacian(g, k) * b,
                 laplacian(g).scaled(binom(n - 2, k - 1)));
}

IdentityReport verify_general_projection(const Graph& g, int h, int k) {
  const int n = g.order();
  require_levels(n, h, k);
  const SparseIntMatrix b = inclusion_matrix(n, k, h);
  const SparseIntMatrix bt = b.transpose();
  return compare("general_projection", &g, n, h, k, bt * token_laplacian(g, k) * b,
                 bt * b * token_laplacian(g, h));
}

IdentityReport verify_adjacency_relation(const Graph& g, int h, int k) {
  const int n = g.order();
  require_levels(n, h, k);
  const SparseIntMatrix b = inclusion_matrix(n, k, h);
  const Graph fk = token_graph(g, k).graph;
  const Graph fh = token_graph(g, h).graph;
  return compare("adjacency_relation", &g, n, h, k, adjacency(fk) * b - b * adjacency(fh),
                 degree_matrix(fk) * b - b * degree_matrix(fh));
}

IdentityReport verify_commuting(const SparseIntMatrix& a, const SparseIntMatrix& b,
                                std::string name) {
  return compare(std::move(name), nullptr, 0, 0, 0, a * b, b * a);
}

IdentityReport verify_commutation(const Graph& g, int k) {
  const int n = g.order();
  require_levels(n, 1, k);
  IdentityReport r =
      verify_commuting(token_laplacian(g, k), token_laplacian(complement(g), k), "commutation");
  r.n = n;
  r.h = k;
  r.k = k;
  r.graph = graph_id(g);
  return r;
}

IdentityReport verify_incidence_factorization(const Graph& g, int k) {
  const int n = g.order();
  require_levels(n, 1, k);
  const Graph fk = token_graph(g, k).graph;
  const SparseIntMatrix t = incidence_matrix(fk);
  IdentityReport r = compare("incidence_factorization", &g, n, 1, k, laplacian(fk), t * t.transpose());
  if (!r.holds()) return r;

  // Column structure of C_k = B^T T_k: every column is e_a - e_b for an edge
  // {a,b} of G, and each edge appears C(n-2,k-1) times. A malformed column is
  // reported at (vertex, column); a wrong edge count at (u, v) with the count
  // seen against the count expected.
  const SparseIntMatrix c = inclusion_matrix(n, k, 1).transpose() * t;
  const SparseIntMatrix ct = c.transpose();
  std::map<Edge, std::int64_t> per_edge;
  for (std::int64_t col = 0; col < ct.rows(); ++col) {
    const auto entries = ct.row(col);
    const bool shape_ok = entries.size() == 2 && entries[0].value * entries[1].value == -1;
    if (!shape_ok) {
      const std::int64_t row = entries.empty() ? 0 : entries[0].col;
      const std::int64_t got = entries.empty() ? 0 : entries[0].value;
      r.discrepancy = Discrepancy{row, col, got, entries.empty() ? 1 : (got > 0 ? 1 : -1)};
      return r;
    }
    const int a = static_cast<int>(entries[0].col);
    const int b = static_cast<int>(entries[1].col);
    if (!g.has_edge(a, b)) {
      r.discrepancy = Discrepancy{a, col, entries[0].value, 0};
      return r;
    }
    ++per_edge[{a, b}];
  }
  const std::int64_t expected = binom(n - 2, k - 1);
  for (const auto& [u, v] : g.edges()) {
    const auto it = per_edge.find({u, v});
    const std::int64_t seen = it == per_edge.end() ? 0 : it->second;
    if (seen != expected) {
      r.discrepancy = Discrepancy{u, v, seen, expected};
      return r;
    }
  }
  return r;
}

SparseIntMatrix recover_lower_laplacian(const Graph& g, int h, int k) {
  const int n = g.order();
  require_levels(n, h, k);
  const SparseIntMatrix b = inclusion_matrix(n, k, h);
  const SparseIntMatrix bt = b.transpose();
  return exact_solve(bt * b, bt * token_laplacian(g, k) * b);
}

IdentityReport verify_recovery(const Graph& g, int h, int k) {
  return compare("recovery", &g, g.order(), h, k, recover_lower_laplacian(g, h, k),
                 token_laplacian(g, h));
}

}  // namespace tokenlap
