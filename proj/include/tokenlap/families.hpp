#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "tokenlap/graph.hpp"

namespace tokenlap {

struct GraphFamilySpec;

namespace family {

struct Complete { int n; };
struct Path { int n; };
struct Cycle { int n; };
/// K_{1,n-1}; the center is vertex 1.
struct Star { int n; };
struct CompleteBipartite { int n1; int n2; };
/// k-subsets of [n], adjacent when they share k-1 elements.
struct Johnson { int n; int k; };
/// (k-1)-subsets of [2k-1], adjacent when disjoint.
struct Odd { int k; };
/// Bipartite double: V then V', with u ~ v' whenever u ~ v.
struct Double { std::shared_ptr<const GraphFamilySpec> of; };
struct DoubleOfGraph { Graph of; };
/// k-subsets then (k+1)-subsets of [n], adjacent under inclusion.
struct DoubledJohnson { int n; int k; };
struct Empty { int n; };

}  // namespace family

struct GraphFamilySpec {
  std::variant<family::Complete, family::Path, family::Cycle, family::Star,
               family::CompleteBipartite, family::Johnson, family::Odd, family::Double,
               family::DoubleOfGraph, family::DoubledJohnson, family::Empty>
      kind;
};

Graph make_family(const GraphFamilySpec& spec);

/// Double (bipartite double cover) of an arbitrary graph.
Graph double_graph(const Graph& g);

/// Parses "name:params", e.g. "path:4", "bipartite:2,3", "johnson:5,2",
/// "odd:3", "doubled-johnson:3,1", "double:cycle:5". Throws ParseError.
GraphFamilySpec parse_family(std::string_view text);

std::string to_string(const GraphFamilySpec& spec);

}  // namespace tokenlap
