#include "tokenlap/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "tokenlap/closed_form.hpp"
#include "tokenlap/combinatorics.hpp"
#include "tokenlap/eigensolver.hpp"
#include "tokenlap/error.hpp"
#include "tokenlap/families.hpp"
#include "tokenlap/token_graph.hpp"

namespace tokenlap {

Embedding::Embedding(Eigen::VectorXd v) : v_(std::move(v)) {
  const double scale = std::max(1.0, v_.size() == 0 ? 0.0 : v_.cwiseAbs().maxCoeff());
  if (std::abs(v_.sum()) > 1e-9 * static_cast<double>(v_.size()) * scale) {
    throw InvalidArgument("vector is not orthogonal to the all-ones vector");
  }
}

namespace {

void require_levels(int n, int h, int k) {
  if (!(1 <= h && h <= k && k <= n - 1)) {
    throw InvalidArgument("token levels require 1 <= h <= k <= n-1");
  }
}

}  // namespace

Eigen::VectorXd lift_vector(const Eigen::VectorXd& v, int n, int h, int k) {
  require_levels(n, h, k);
  return inclusion_matrix(n, k, h).apply(v);
}

std::optional<Eigen::VectorXd> project_vector(const Eigen::VectorXd& w, int n, int h, int k) {
  require_levels(n, h, k);
  Eigen::VectorXd p = inclusion_matrix(n, k, h).apply_transpose(w);
  const double wmax = w.size() == 0 ? 0.0 : w.cwiseAbs().maxCoeff();
  const double pmax = p.size() == 0 ? 0.0 : p.cwiseAbs().maxCoeff();
  if (pmax <= 1e-9 * wmax) return std::nullopt;
  return p;
}

double algebraic_connectivity(const Graph& g) {
  if (g.order() == 1 || !is_connected(g)) return 0.0;
  return laplacian_eigenvalues(g)(1);
}

double rayleigh(const SparseIntMatrix& laplacian, const Embedding& v) {
  const Eigen::VectorXd& x = v.vector();
  const double norm2 = x.squaredNorm();
  if (norm2 == 0.0) throw InvalidArgument("Rayleigh quotient of the zero vector");
  return x.dot(laplacian.apply(x)) / norm2;
}

double rayleigh(const Graph& g, const Embedding& v) {
  const Eigen::VectorXd& x = v.vector();
  if (x.size() != g.order()) throw InvalidArgument("embedding length does not match the graph");
  const double norm2 = x.squaredNorm();
  if (norm2 == 0.0) throw InvalidArgument("Rayleigh quotient of the zero vector");
  double cut = 0.0;
  for (const auto& [i, j] : g.edges()) cut += (x(i) - x(j)) * (x(i) - x(j));
  return cut / norm2;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> restriction_embeddings(const Eigen::VectorXd& w,
                                                                   int n, int k, int a) {
  if (k < 1 || k > n - 1) throw InvalidArgument("k out of range");
  if (a < 0 || a >= n) throw InvalidArgument("vertex out of range");
  const SubsetIndex index(n, k);
  if (w.size() != index.size()) throw InvalidArgument("vector length does not match C(n,k)");
  const Eigen::VectorXd projected = inclusion_matrix(n, k, 1).apply_transpose(w);
  const double scale = std::max(1.0, w.size() == 0 ? 0.0 : w.cwiseAbs().maxCoeff());
  if (projected.cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw InvalidArgument("vector is not in the kernel of B^T");
  }
  std::vector<double> with;
  std::vector<double> without;
  const auto subsets = index.subsets();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    (subsets[i].contains(a) ? with : without).push_back(w(static_cast<Eigen::Index>(i)));
  }
  return {Eigen::Map<Eigen::VectorXd>(with.data(), static_cast<Eigen::Index>(with.size())),
          Eigen::Map<Eigen::VectorXd>(without.data(), static_cast<Eigen::Index>(without.size()))};
}

namespace {

double residual(const Eigen::MatrixXd& m, const Eigen::VectorXd& v, double lambda) {
  return (m * v - lambda * v).norm();
}

}  // namespace

PairingResult pairing_decomposition(const Graph& g, int k) {
  const int n = g.order();
  const Eigen::MatrixXd lg = laplacian(token_graph(g, k).graph).to_dense<double>();
  const Eigen::MatrixXd lc = laplacian(token_graph(complement(g), k).graph).to_dense<double>();
  const Eigen::MatrixXd mixed = lg + kPairingMix * lc;

  SymmetricEigenSolver<double> es(mixed);
  Eigen::MatrixXd basis = es.eigenvectors();
  const Eigen::VectorXd& mixed_values = es.eigenvalues();
  const Eigen::Index dim = basis.cols();
  const double cluster_tol =
      default_group_tol(mixed.cwiseAbs().maxCoeff(), mixed.rows()) * 10.0;

  auto worst_residual = [&](Eigen::Index begin, Eigen::Index end) {
    double worst = 0.0;
    for (Eigen::Index i = begin; i < end; ++i) {
      const Eigen::VectorXd v = basis.col(i);
      worst = std::max(worst, residual(lg, v, v.dot(lg * v)));
      worst = std::max(worst, residual(lc, v, v.dot(lc * v)));
    }
    return worst;
  };

  // Coincident mixed eigenvalues may hide distinct (L, L') pairs: rotate
  // within the cluster so that L is diagonal there, then L' inside each
  // repeated eigenvalue of L.
  auto diagonalize_block = [&](Eigen::Index begin, Eigen::Index count, const Eigen::MatrixXd& m) {
    const Eigen::MatrixXd block = basis.middleCols(begin, count);
    Eigen::MatrixXd restricted = block.transpose() * m * block;
    restricted = 0.5 * (restricted + restricted.transpose()).eval();
    const SymmetricEigenSolver<double> inner(restricted);
    basis.middleCols(begin, count) = block * inner.eigenvectors();
    return Eigen::VectorXd(inner.eigenvalues());
  };
  for (Eigen::Index begin = 0; begin < dim;) {
    Eigen::Index end = begin + 1;
    while (end < dim && mixed_values(end) - mixed_values(end - 1) <= cluster_tol) ++end;
    if (end - begin > 1 && worst_residual(begin, end) > kPairingTol) {
      const Eigen::VectorXd inner_values = diagonalize_block(begin, end - begin, lg);
      for (Eigen::Index s = 0; s < end - begin;) {
        Eigen::Index t = s + 1;
        while (t < end - begin && inner_values(t) - inner_values(t - 1) <= cluster_tol) ++t;
        if (t - s > 1) diagonalize_block(begin + s, t - s, lc);
        s = t;
      }
    }
    begin = end;
  }

  PairingResult result;
  result.triples.reserve(static_cast<std::size_t>(dim));
  std::vector<std::int64_t> rounded;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::VectorXd v = basis.col(i);
    const double a = v.dot(lg * v);
    const double b = v.dot(lc * v);
    result.max_residual = std::max({result.max_residual, residual(lg, v, a), residual(lc, v, b)});
    result.triples.push_back({a, b, a + b});
    const double nearest = std::round(a + b);
    result.max_sum_rounding = std::max(result.max_sum_rounding, std::abs(a + b - nearest));
    rounded.push_back(static_cast<std::int64_t>(nearest));
  }
  if (result.max_residual > kPairingTol) {
    throw NumericalError("pairing residual " + std::to_string(result.max_residual) +
                         " exceeds tolerance after refinement");
  }
  std::sort(rounded.begin(), rounded.end());
  result.sums_match_johnson = rounded == johnson_laplacian_spectrum(n, k).expanded();
  std::sort(result.triples.begin(), result.triples.end(), [](const PairTriple& x, const PairTriple& y) {
    return x.lambda_johnson != y.lambda_johnson ? x.lambda_johnson < y.lambda_johnson
                                                : x.lambda_graph < y.lambda_graph;
  });
  return result;
}

IntegerEigenvalueBound integer_eigenvalue_bound(const Graph& g, int k) {
  const auto components = connected_components(token_graph(complement(g), k).graph);
  const Eigen::VectorXd values = laplacian_eigenvalues(token_graph(g, k).graph);
  int count = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (std::abs(values(i) - std::round(values(i))) <= kIntegerTol) ++count;
  }
  const int bound = static_cast<int>(components.size());
  return {bound, count, count >= bound};
}

IsomorphismCheck check_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& image) {
  const int n = a.order();
  if (b.order() != n || static_cast<int>(image.size()) != n) {
    return {false, "orders differ: " + std::to_string(n) + " vs " + std::to_string(b.order())};
  }
  std::vector<char> hit(n, 0);
  for (int u = 0; u < n; ++u) {
    if (image[u] < 0 || image[u] >= n || hit[image[u]]) {
      return {false, "map is not a bijection at vertex " + std::to_string(u + 1)};
    }
    hit[image[u]] = 1;
  }
  if (a.edge_count() != b.edge_count()) {
    return {false, "edge counts differ: " + std::to_string(a.edge_count()) + " vs " +
                       std::to_string(b.edge_count())};
  }
  for (const auto& [u, v] : a.edges()) {
    if (!b.has_edge(image[u], image[v])) {
      return {false, "edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                         "} maps to a non-edge"};
    }
  }
  return {true, {}};
}

IsomorphismCheck verify_star_isomorphism(int k, int m) {
  if (m < 2 || k < 1 || k > m - 1) throw InvalidArgument("star isomorphism needs 1 <= k <= m-1");
  const Graph star = make_family({family::Star{m}});
  const TokenGraph tg = token_graph(star, k);
  const int spokes = m - 1;
  const SubsetIndex lower(spokes, k - 1);
  const SubsetIndex upper(spokes, k);
  const Graph doubled = make_family({family::DoubledJohnson{spokes, k - 1}});

  const auto subsets = tg.index.subsets();
  std::vector<int> image(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const VertexSubset spoke_part{subsets[i].bits >> 1};
    image[i] = subsets[i].contains(0)
                   ? static_cast<int>(lower.rank(spoke_part))
                   : static_cast<int>(lower.size() + upper.rank(spoke_part));
  }
  auto check = check_isomorphism(tg.graph, doubled, image);
  if (!check.holds || m != 2 * k) return check;

  // m = 2k: compose with J(2k-1; k-1, k) -> 2O_k, which complements the
  // k-subsets inside the spokes.
  const Graph double_odd = make_family({family::Double{
      std::make_shared<const GraphFamilySpec>(GraphFamilySpec{family::Odd{k}})}});
  const std::uint64_t all_spokes = (std::uint64_t{1} << spokes) - 1;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const VertexSubset spoke_part{subsets[i].bits >> 1};
    image[i] = subsets[i].contains(0)
                   ? static_cast<int>(lower.rank(spoke_part))
                   : static_cast<int>(lower.size() +
                                      lower.rank(VertexSubset{all_spokes & ~spoke_part.bits}));
  }
  check = check_isomorphism(tg.graph, double_odd, image);
  if (!check.holds) check.witness = "double odd graph: " + check.witness;
  return check;
}

}  // namespace tokenlap
