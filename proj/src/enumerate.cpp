#include "tokenlap/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tokenlap/error.hpp"

namespace tokenlap {
namespace {

// Bit index of the pair (i, j), i < j, in column-major upper-triangle order.
constexpr int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

Graph from_code(int n, std::uint64_t code) {
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> pair_bit(i, j)) & 1U) g.add_edge(i, j);
  return g;
}

// Code of g relabeled so that vertex order[p] becomes p.
std::uint64_t code_under(const std::vector<std::uint64_t>& masks, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::uint64_t code = 0;
  for (int q = 1; q < n; ++q) {
    for (int p = 0; p < q; ++p) {
      if ((masks[order[p]] >> order[q]) & 1U) code |= std::uint64_t{1} << pair_bit(p, q);
    }
  }
  return code;
}

}  // namespace

std::vector<Graph> all_labeled_graphs(int n) {
  if (n < 1 || n > 6) throw InvalidArgument("all_labeled_graphs supports 1 <= n <= 6");
  const int bits = n * (n - 1) / 2;
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << bits);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    out.push_back(from_code(n, code));
  }
  return out;
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw InvalidArgument("canonical_code supports n <= 11");
  std::vector<std::uint64_t> masks(n);
  for (int v = 0; v < n; ++v) masks[v] = g.neighbor_mask(v);

  // Cell key: degree, then the sorted degrees of the neighbors.
  std::vector<std::pair<std::vector<int>, int>> keyed;
  for (int v = 0; v < n; ++v) {
    std::vector<int> key{g.degree(v)};
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
    keyed.emplace_back(std::move(key), v);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> order(n);
  std::vector<int> cell_start;
  for (int p = 0; p < n; ++p) {
    order[p] = keyed[p].second;
    if (p == 0 || keyed[p].first != keyed[p - 1].first) cell_start.push_back(p);
  }
  cell_start.push_back(n);

  // Maximize over all orderings that permute within cells.
  std::uint64_t best = 0;
  const int cells = static_cast<int>(cell_start.size()) - 1;
  auto recurse = [&](auto&& self, int cell) -> void {
    if (cell == cells) {
      best = std::max(best, code_under(masks, order));
      return;
    }
    const auto first = order.begin() + cell_start[cell];
    const auto last = order.begin() + cell_start[cell + 1];
    std::sort(first, last);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return best;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > 8) throw InvalidArgument("nonisomorphic_graphs supports 1 <= n <= 8");
  std::set<std::uint64_t> level{0};  // n = 1: the single vertex
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      // Append vertex m-1 with every possible neighborhood.
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (m - 1)); ++nb) {
        std::uint64_t extended = code;
        for (int i = 0; i < m - 1; ++i) {
          if ((nb >> i) & 1U) extended |= std::uint64_t{1} << pair_bit(i, m - 1);
        }
        next.insert(canonical_code(from_code(m, extended)));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(from_code(n, code));
  return out;
}

std::vector<Graph> connected_nonisomorphic_graphs(int n) {
  auto all = nonisomorphic_graphs(n);
  std::vector<Graph> out;
  for (auto& g : all) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace tokenlap
