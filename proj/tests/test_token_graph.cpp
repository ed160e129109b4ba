#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "tokenlap/combinatorics.hpp"
#include "tokenlap/enumerate.hpp"
#include "tokenlap/error.hpp"
#include "tokenlap/families.hpp"
#include "tokenlap/graph6.hpp"
#include "tokenlap/identities.hpp"
#include "tokenlap/token_graph.hpp"

using namespace tokenlap;

namespace {

using Dense = std::vector<std::vector<std::int64_t>>;

// The graph with edges {1,2},{2,3},{2,4},{3,4}.
Graph triangle_with_pendant() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}); }

// Token adjacency straight from the definition: A ~ B iff A xor B is an edge.
bool token_adjacent(const Graph& g, VertexSubset a, VertexSubset b) {
  const std::uint64_t diff = a.bits ^ b.bits;
  if (std::popcount(diff) != 2) return false;
  const int u = std::countr_zero(diff);
  const int v = 63 - std::countl_zero(diff);
  return g.has_edge(u, v);
}

}  // namespace

TEST_CASE("token graph sizes") {
  const TokenGraph tg = token_graph(parse_graph6("Ch"), 2);
  CHECK(tg.graph.order() == 6);
  CHECK(tg.graph.edge_count() == 6);
  CHECK_THROWS_AS(token_graph(parse_graph6("Ch"), 0), InvalidArgument);
  CHECK_THROWS_AS(token_graph(parse_graph6("Ch"), 4), InvalidArgument);
  try {
    token_graph(make_family({family::Path{20}}), 10);  // C(20,10) = 184756
    FAIL("expected the size cap to trip");
  } catch (const CapExceeded& e) {
    CHECK(std::string(e.what()).find("184756") != std::string::npos);
  }
}

TEST_CASE("token graph of K_n is the Johnson graph; k = 1 is the identity") {
  CHECK(token_graph(make_family({family::Complete{4}}), 2).graph ==
        make_family({family::Johnson{4, 2}}));
  CHECK(token_graph(make_family({family::Complete{7}}), 3).graph ==
        make_family({family::Johnson{7, 3}}));
  const Graph g = parse_graph6("Dhc");
  CHECK(token_graph(g, 1).graph == g);
}

TEST_CASE("exhaustive structure checks for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      for (int k = 1; k <= n - 1; ++k) {
        const TokenGraph tg = token_graph(g, k);
        REQUIRE(tg.graph.order() == binom(n, k));
        REQUIRE(static_cast<std::int64_t>(tg.graph.edge_count()) ==
                binom(n - 2, k - 1) * static_cast<std::int64_t>(g.edge_count()));

        // Against the definition, pair by pair.
        const auto subsets = tg.index.subsets();
        for (std::size_t a = 0; a < subsets.size(); ++a) {
          for (std::size_t b = a + 1; b < subsets.size(); ++b) {
            REQUIRE(tg.graph.has_edge(static_cast<int>(a), static_cast<int>(b)) ==
                    token_adjacent(g, subsets[a], subsets[b]));
          }
          std::vector<VertexSubset> expected;
          for (int b : tg.graph.neighbors(static_cast<int>(a))) expected.push_back(subsets[b]);
          REQUIRE(token_neighbors(tg, subsets[a]) == expected);
        }

        // Complementation maps F_k onto F_{n-k}.
        const TokenGraph dual = token_graph(g, n - k);
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (const auto& [a, b] : tg.graph.edges()) {
          const int ca = static_cast<int>(dual.index.rank(VertexSubset{full ^ subsets[a].bits}));
          const int cb = static_cast<int>(dual.index.rank(VertexSubset{full ^ subsets[b].bits}));
          REQUIRE(dual.graph.has_edge(ca, cb));
        }
        REQUIRE(dual.graph.edge_count() == tg.graph.edge_count());

        if (is_connected(g)) REQUIRE(is_connected(tg.graph));
      }
    }
  }
}

TEST_CASE("implicit neighbors on random probes at n = 8") {
  std::mt19937_64 rng(3);
  Graph g(8);
  for (int u = 0; u < 8; ++u) {
    for (int v = u + 1; v < 8; ++v) {
      if (rng() % 2) g.add_edge(u, v);
    }
  }
  const TokenGraph tg = token_graph(g, 4);
  for (int probe = 0; probe < 200; ++probe) {
    const int a = static_cast<int>(rng() % tg.graph.order());
    std::vector<VertexSubset> expected;
    for (int b : tg.graph.neighbors(a)) expected.push_back(tg.index.unrank(b));
    REQUIRE(token_neighbors(g, tg.index.unrank(a)) == expected);
  }
}

TEST_CASE("token neighbors examples") {
  const Graph p4 = parse_graph6("Ch");
  CHECK(token_neighbors(p4, VertexSubset::from_elements({0, 1})) ==
        std::vector<VertexSubset>{VertexSubset::from_elements({0, 2})});
  const Graph k6 = make_family({family::Complete{6}});
  CHECK(token_neighbors(k6, VertexSubset::from_elements({0, 3})).size() == 8);

  const Graph g = triangle_with_pendant();
  const VertexSubset a = VertexSubset::from_elements({0, 1});
  std::vector<VertexSubset> brute;
  for (VertexSubset b : SubsetIndex(4, 2).subsets()) {
    if (token_adjacent(g, a, b)) brute.push_back(b);
  }
  CHECK(token_neighbors(g, a) == brute);
  CHECK(brute == std::vector<VertexSubset>{VertexSubset::from_elements({0, 2}),
                                            VertexSubset::from_elements({0, 3})});
}

TEST_CASE("Laplacians match the displayed matrices") {
  CHECK(laplacian(parse_graph6("Ch")).to_dense_rows() ==
        Dense{{1, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 1}});
  CHECK(laplacian(Graph(1)).to_dense_rows() == Dense{{0}});

  const Graph g = triangle_with_pendant();
  CHECK(laplacian(g).to_dense_rows() ==
        Dense{{1, -1, 0, 0}, {-1, 3, -1, -1}, {0, -1, 2, -1}, {0, -1, -1, 2}});
  CHECK(laplacian(token_graph(g, 2).graph).to_dense_rows() == Dense{{2, -1, -1, 0, 0, 0},
                                                                    {-1, 3, -1, -1, 0, 0},
                                                                    {-1, -1, 3, 0, -1, 0},
                                                                    {0, -1, 0, 3, -1, -1},
                                                                    {0, 0, -1, -1, 3, -1},
                                                                    {0, 0, 0, -1, -1, 2}});
  const Graph gc = complement(g);
  CHECK(laplacian(gc).to_dense_rows() ==
        Dense{{2, 0, -1, -1}, {0, 0, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}});
  CHECK(laplacian(token_graph(gc, 2).graph).to_dense_rows() == Dense{{2, 0, 0, -1, -1, 0},
                                                                     {0, 1, 0, 0, 0, -1},
                                                                     {0, 0, 1, 0, 0, -1},
                                                                     {-1, 0, 0, 1, 0, 0},
                                                                     {-1, 0, 0, 0, 1, 0},
                                                                     {0, -1, -1, 0, 0, 2}});
}

TEST_CASE("displayed L_2 of P_4 agrees up to a simultaneous permutation") {
  // The display does not state its vertex order, so search all orders.
  const Dense shown{{2, -1, 0, -1, 0, 0}, {-1, 3, -1, 0, -1, 0}, {0, -1, 2, -1, 0, 0},
                    {-1, 0, -1, 3, 0, -1}, {0, -1, 0, 0, 1, 0},  {0, 0, 0, -1, 0, 1}};
  const Dense ours = laplacian(token_graph(parse_graph6("Ch"), 2).graph).to_dense_rows();
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    bool same = true;
    for (int i = 0; i < 6 && same; ++i) {
      for (int j = 0; j < 6 && same; ++j) same = ours[perm[i]][perm[j]] == shown[i][j];
    }
    found = same;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  CHECK(found);
}

TEST_CASE("incidence matrix") {
  const Graph k2 = make_family({family::Complete{2}});
  CHECK(incidence_matrix(k2).to_dense_rows() == Dense{{1}, {-1}});
  const SparseIntMatrix t3 = incidence_matrix(make_family({family::Complete{3}}));
  CHECK(t3.cols() == 3);
  CHECK(exact_rank(t3) == 2);

  std::mt19937_64 rng(9);
  for (const Graph& g : nonisomorphic_graphs(5)) {
    const SparseIntMatrix l = laplacian(g);
    CHECK(incidence_matrix(g) * incidence_matrix(g).transpose() == l);
    std::vector<bool> flip(g.edge_count());
    for (std::size_t e = 0; e < flip.size(); ++e) flip[e] = rng() % 2;
    const SparseIntMatrix t = incidence_matrix(g, flip);
    REQUIRE(t * t.transpose() == l);
    const int components = static_cast<int>(connected_components(g).size());
    REQUIRE(exact_rank(t) == (g.edge_count() == 0 ? 0 : g.order() - components));
  }
}

TEST_CASE("adjacency and degree matrices") {
  const Graph g = triangle_with_pendant();
  CHECK(degree_matrix(g) - adjacency(g) == laplacian(g));
  CHECK(adjacency(g).is_symmetric());
  CHECK(degree_matrix(g).coeff(1, 1) == 3);
}
