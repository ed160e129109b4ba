#include "tokenlap/families.hpp"

#include <charconv>
#include <vector>

#include "tokenlap/combinatorics.hpp"
#include "tokenlap/error.hpp"

namespace tokenlap {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

int checked_order(std::int64_t n) {
  require(n >= 1 && n <= Graph::kMaxOrder, "family order " + std::to_string(n) + " out of range");
  return static_cast<int>(n);
}

// Graph whose vertices are the given subsets, joined by `adjacent`.
template <typename Pred>
Graph subset_graph(const std::vector<VertexSubset>& vertices, Pred adjacent) {
  Graph g(checked_order(static_cast<std::int64_t>(vertices.size())));
  const int size = g.order();
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace

Graph double_graph(const Graph& g) {
  const int n = g.order();
  Graph out(checked_order(2 * static_cast<std::int64_t>(n)));
  for (const auto& [u, v] : g.edges()) {
    out.add_edge(u, n + v);
    out.add_edge(v, n + u);
  }
  return out;
}

Graph make_family(const GraphFamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const family::Complete& f) {
            Graph g(checked_order(f.n));
            for (int u = 0; u < f.n; ++u)
              for (int v = u + 1; v < f.n; ++v) g.add_edge(u, v);
            return g;
          },
          [](const family::Path& f) {
            Graph g(checked_order(f.n));
            for (int u = 0; u + 1 < f.n; ++u) g.add_edge(u, u + 1);
            return g;
          },
          [](const family::Cycle& f) {
            require(f.n >= 3, "cycle needs at least 3 vertices");
            Graph g(checked_order(f.n));
            for (int u = 0; u < f.n; ++u) g.add_edge(u, (u + 1) % f.n);
            return g;
          },
          [](const family::Star& f) {
            Graph g(checked_order(f.n));
            for (int v = 1; v < f.n; ++v) g.add_edge(0, v);
            return g;
          },
          [](const family::CompleteBipartite& f) {
            require(f.n1 >= 1 && f.n2 >= 1, "bipartite parts must be nonempty");
            Graph g(checked_order(static_cast<std::int64_t>(f.n1) + f.n2));
            for (int u = 0; u < f.n1; ++u)
              for (int v = 0; v < f.n2; ++v) g.add_edge(u, f.n1 + v);
            return g;
          },
          [](const family::Johnson& f) {
            require(f.n >= 2 && f.n <= 64 && f.k >= 1 && f.k <= f.n - 1,
                    "Johnson(n,k) requires 1 <= k <= n-1");
            return subset_graph(SubsetIndex(f.n, f.k).subsets(),
                                [k = f.k](VertexSubset a, VertexSubset b) {
                                  return VertexSubset{a.bits & b.bits}.size() == k - 1;
                                });
          },
          [](const family::Odd& f) {
            require(f.k >= 1 && 2 * f.k - 1 <= 64, "Odd(k) requires 1 <= k <= 32");
            return subset_graph(SubsetIndex(2 * f.k - 1, f.k - 1).subsets(),
                                [](VertexSubset a, VertexSubset b) { return (a.bits & b.bits) == 0; });
          },
          [](const family::Double& f) {
            require(f.of != nullptr, "Double needs an inner family");
            return double_graph(make_family(*f.of));
          },
          [](const family::DoubleOfGraph& f) { return double_graph(f.of); },
          [](const family::DoubledJohnson& f) {
            require(f.n >= 1 && f.n <= 64 && f.k >= 0 && f.k <= f.n - 1,
                    "DoubledJohnson(n,k) requires 0 <= k <= n-1");
            auto vertices = SubsetIndex(f.n, f.k).subsets();
            const auto upper = SubsetIndex(f.n, f.k + 1).subsets();
            vertices.insert(vertices.end(), upper.begin(), upper.end());
            return subset_graph(vertices, [](VertexSubset a, VertexSubset b) {
              if (a.size() == b.size()) return false;
              const auto both = a.bits & b.bits;
              return both == a.bits || both == b.bits;
            });
          },
          [](const family::Empty& f) { return Graph(checked_order(f.n)); },
      },
      spec.kind);
}

namespace {

std::vector<int> parse_ints(std::string_view text, std::size_t offset) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw ParseError("expected an integer parameter", offset + pos);
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

GraphFamilySpec parse_family_at(std::string_view text, std::size_t offset) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family needs name:params", offset);
  const auto name = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  const std::size_t at = offset + colon + 1;
  if (name == "double") {
    return {family::Double{std::make_shared<const GraphFamilySpec>(parse_family_at(rest, at))}};
  }
  const auto p = parse_ints(rest, at);
  auto want = [&](std::size_t count) {
    if (p.size() != count) {
      throw ParseError("family '" + std::string(name) + "' takes " + std::to_string(count) +
                           " parameter(s)",
                       at);
    }
  };
  if (name == "complete") { want(1); return {family::Complete{p[0]}}; }
  if (name == "path") { want(1); return {family::Path{p[0]}}; }
  if (name == "cycle") { want(1); return {family::Cycle{p[0]}}; }
  if (name == "star") { want(1); return {family::Star{p[0]}}; }
  if (name == "bipartite") { want(2); return {family::CompleteBipartite{p[0], p[1]}}; }
  if (name == "johnson") { want(2); return {family::Johnson{p[0], p[1]}}; }
  if (name == "odd") { want(1); return {family::Odd{p[0]}}; }
  if (name == "doubled-johnson") { want(2); return {family::DoubledJohnson{p[0], p[1]}}; }
  if (name == "empty") { want(1); return {family::Empty{p[0]}}; }
  throw ParseError("unknown family '" + std::string(name) + "'", offset);
}

}  // namespace

GraphFamilySpec parse_family(std::string_view text) { return parse_family_at(text, 0); }

std::string to_string(const GraphFamilySpec& spec) {
  auto s = [](int x) { return std::to_string(x); };
  return std::visit(
      Overloaded{
          [&](const family::Complete& f) { return "complete:" + s(f.n); },
          [&](const family::Path& f) { return "path:" + s(f.n); },
          [&](const family::Cycle& f) { return "cycle:" + s(f.n); },
          [&](const family::Star& f) { return "star:" + s(f.n); },
          [&](const family::CompleteBipartite& f) { return "bipartite:" + s(f.n1) + "," + s(f.n2); },
          [&](const family::Johnson& f) { return "johnson:" + s(f.n) + "," + s(f.k); },
          [&](const family::Odd& f) { return "odd:" + s(f.k); },
          [&](const family::Double& f) { return "double:" + to_string(*f.of); },
          [&](const family::DoubleOfGraph& f) { return "double:<graph n=" + s(f.of.order()) + ">"; },
          [&](const family::DoubledJohnson& f) { return "doubled-johnson:" + s(f.n) + "," + s(f.k); },
          [&](const family::Empty& f) { return "empty:" + s(f.n); },
      },
      spec.kind);
}

}  // namespace tokenlap
