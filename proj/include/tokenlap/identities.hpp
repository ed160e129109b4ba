#pragma once

#include <optional>
#include <string>

#include "tokenlap/graph.hpp"
#include "tokenlap/sparse_int_matrix.hpp"

namespace tokenlap {

/// Outcome of one exact matrix identity check. Only the first mismatching
/// entry (row-major) is kept.
struct IdentityReport {
  std::string identity;
  int n = 0;
  int h = 0;
  int k = 0;
  std::string graph;  // graph6 of the base graph, empty when not applicable
  std::optional<Discrepancy> discrepancy;

  bool holds() const noexcept { return !discrepancy.has_value(); }
};

/// B^T B = C(n-2,k-1) I + C(n-2,k-2) J for B = B(n;k,1).
IdentityReport verify_gram(int n, int k);

/// B L_h = L_k B for B = B(n;k,h).
IdentityReport verify_intertwining(const Graph& g, int h, int k);

/// B^T L_k B = C(n-2,k-1) L_1 for B = B(n;k,1).
IdentityReport verify_projection(const Graph& g, int k);

/// B^T L_k B = B^T B L_h for B = B(n;k,h).
IdentityReport verify_general_projection(const Graph& g, int h, int k);

/// A_k B - B A_h = D_k B - B D_h for B = B(n;k,h).
IdentityReport verify_adjacency_relation(const Graph& g, int h, int k);

/// L(F_k(G)) and L(F_k(complement G)) commute.
IdentityReport verify_commutation(const Graph& g, int k);

/// a b = b a; the generic check behind verify_commutation.
IdentityReport verify_commuting(const SparseIntMatrix& a, const SparseIntMatrix& b,
                                std::string name = "commutation");

/// L_k = T_k T_k^T, and every column of B^T T_k (B = B(n;k,1)) is +e_a - e_b
/// for an edge {a,b} of G, each edge of G occurring C(n-2,k-1) times.
IdentityReport verify_incidence_factorization(const Graph& g, int k);

/// L_h obtained from L_k alone by solving (B^T B) X = B^T L_k B exactly.
SparseIntMatrix recover_lower_laplacian(const Graph& g, int h, int k);

/// recover_lower_laplacian compared with the directly built L_h.
IdentityReport verify_recovery(const Graph& g, int h, int k);

}  // namespace tokenlap
