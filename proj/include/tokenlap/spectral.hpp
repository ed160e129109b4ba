#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tokenlap/graph.hpp"
#include "tokenlap/sparse_int_matrix.hpp"
#include "tokenlap/spectrum.hpp"

namespace tokenlap {

/// A vertex vector orthogonal to the all-ones vector.
class Embedding {
 public:
  /// Throws InvalidArgument unless |sum| <= 1e-9 * dimension * max(1, max|v|).
  explicit Embedding(Eigen::VectorXd v);

  const Eigen::VectorXd& vector() const noexcept { return v_; }

 private:
  Eigen::VectorXd v_;
};

/// B(n;k,h) * v: lifts a vector on the h-subsets to the k-subsets by summing
/// over contained h-subsets. Eigenvectors of L_h lift to eigenvectors of L_k.
Eigen::VectorXd lift_vector(const Eigen::VectorXd& v, int n, int h, int k);

/// B(n;k,h)^T * w, or nullopt when that is numerically zero
/// (max-norm <= 1e-9 * max|w|).
std::optional<Eigen::VectorXd> project_vector(const Eigen::VectorXd& w, int n, int h, int k);

/// Second-smallest Laplacian eigenvalue; 0 for disconnected graphs and K_1.
double algebraic_connectivity(const Graph& g);

/// v^T L v / v^T v.
double rayleigh(const SparseIntMatrix& laplacian, const Embedding& v);
/// Sum over edges of (v_i - v_j)^2 divided by v^T v.
double rayleigh(const Graph& g, const Embedding& v);

/// w restricted to the k-subsets containing `a` and to those avoiding it,
/// each in lex order. Requires B(n;k,1)^T w = 0 within 1e-9.
std::pair<Eigen::VectorXd, Eigen::VectorXd> restriction_embeddings(const Eigen::VectorXd& w,
                                                                   int n, int k, int a);

struct PairTriple {
  double lambda_graph;       // eigenvalue of L(F_k(G)) on the common vector
  double lambda_complement;  // eigenvalue of L(F_k(complement G))
  double lambda_johnson;     // their sum, an eigenvalue of L(J(n,k))
};

struct PairingResult {
  std::vector<PairTriple> triples;
  double max_residual = 0.0;
  /// Sums rounded to integers equal the Johnson closed form as multisets.
  bool sums_match_johnson = false;
  /// Largest distance from a sum to its nearest integer.
  double max_sum_rounding = 0.0;
};

inline constexpr double kPairingMix = 0.70710678118654752440;  // 1/sqrt(2)
inline constexpr double kPairingTol = 1e-6;

/// Common eigenbasis of L(F_k(G)) and L(F_k(complement G)), found by
/// diagonalizing L + L'/sqrt(2). Inside any cluster where the per-vector
/// residual exceeds kPairingTol, L and then L' are re-diagonalized on the
/// cluster's span.
PairingResult pairing_decomposition(const Graph& g, int k);

inline constexpr double kIntegerTol = 1e-6;

struct IntegerEigenvalueBound {
  int bound;   // components of F_k(complement G)
  int count;   // eigenvalues of F_k(G) within kIntegerTol of an integer
  bool holds;  // count >= bound
};

IntegerEigenvalueBound integer_eigenvalue_bound(const Graph& g, int k);

struct IsomorphismCheck {
  bool holds = false;
  /// Description of the first failure, empty when holds.
  std::string witness;
};

/// Checks F_k(S_m) against J(m-1; k-1, k) under the map sending a subset
/// containing the center c to its spokes minus c and every other subset to
/// itself. For m = 2k it also checks the composite map onto the double of
/// the odd graph O_k.
IsomorphismCheck verify_star_isomorphism(int k, int m);

/// Checks that `image` (a vertex map from a onto b) is a bijection that
/// preserves adjacency in both directions.
IsomorphismCheck check_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& image);

}  // namespace tokenlap
