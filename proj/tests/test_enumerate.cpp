#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tokenlap/enumerate.hpp"
#include "tokenlap/error.hpp"
#include "tokenlap/families.hpp"

using namespace tokenlap;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace

TEST_CASE("graph counts up to isomorphism") {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(nonisomorphic_graphs(n).size() == all[n - 1]);
    CHECK(connected_nonisomorphic_graphs(n).size() == connected[n - 1]);
  }
}

TEST_CASE("labeled graphs") {
  CHECK(all_labeled_graphs(4).size() == 64);
  CHECK(all_labeled_graphs(5).size() == 1024);
  // Distinct canonical codes among the labeled set equal the isomorphism class count.
  std::set<std::uint64_t> codes;
  for (const Graph& g : all_labeled_graphs(5)) codes.insert(canonical_code(g));
  CHECK(codes.size() == 34);
}

TEST_CASE("canonical code is a relabeling invariant") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) g.add_edge(u, v);
      }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(canonical_code(g) == canonical_code(relabel(g, perm)));
  }
  CHECK(canonical_code(make_family({family::Path{4}})) !=
        canonical_code(make_family({family::Star{4}})));
}
