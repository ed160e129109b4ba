#pragma once

#include <cstdint>
#include <vector>

#include "tokenlap/graph.hpp"

namespace tokenlap {

/// Every labeled graph on n vertices (2^(n(n-1)/2) of them), in order of the
/// upper-triangle bit code. Intended for n <= 6.
std::vector<Graph> all_labeled_graphs(int n);

/// Isomorphism-invariant code: the largest upper-triangle bit code over the
/// vertex orderings compatible with an invariant refinement. n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class, sorted by canonical code. The
/// representative is the canonically relabeled graph. Intended for n <= 8.
std::vector<Graph> nonisomorphic_graphs(int n);

std::vector<Graph> connected_nonisomorphic_graphs(int n);

}  // namespace tokenlap
