#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "tokenlap/combinatorics.hpp"
#include "tokenlap/eigensolver.hpp"
#include "tokenlap/enumerate.hpp"
#include "tokenlap/error.hpp"
#include "tokenlap/families.hpp"
#include "tokenlap/graph6.hpp"
#include "tokenlap/spectral.hpp"
#include "tokenlap/spectrum.hpp"
#include "tokenlap/token_graph.hpp"

using namespace tokenlap;

namespace {

const double kSqrt2 = std::numbers::sqrt2;
const double kSqrt3 = std::numbers::sqrt3;

void check_values(const Spectrum& s, std::vector<double> expected, double tol) {
  std::sort(expected.begin(), expected.end());
  const std::vector<double> got = s.values();
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expected[i]) <= tol);
}

// The reconstructed five-vertex example graph with spectrum {0,2,3,4,5}.
Graph example_five() {
  return Graph::from_edges(5, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {3, 4}});
}

Graph triangle_with_pendant() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}); }

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("eigensolver against the Eigen reference solver") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> normal;
  for (int n : {1, 2, 3, 5, 10, 40, 120}) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = normal(rng);
    }
    const EigenDecomposition d = eigh_sym(m);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oracle(m);
    CHECK((d.values - oracle.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10 * (1 + n));
    const double reconstruction =
        (m - d.vectors * d.values.asDiagonal() * d.vectors.transpose()).cwiseAbs().maxCoeff();
    const double orthogonality =
        (d.vectors.transpose() * d.vectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    CHECK(reconstruction < 1e-10 * n);
    CHECK(orthogonality < 1e-10 * n);
    for (int i = 1; i < n; ++i) CHECK(d.values(i - 1) <= d.values(i));
  }
}

TEST_CASE("eigensolver on degenerate and invalid input") {
  const EigenDecomposition z = eigh_sym(Eigen::MatrixXd::Zero(4, 4));
  CHECK(z.values.cwiseAbs().maxCoeff() == 0.0);
  CHECK((z.vectors - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);

  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(eigh_sym(asym), InvalidArgument);

  // Highly repeated spectrum: J_n has eigenvalues {0^(n-1), n}.
  const EigenDecomposition j = eigh_sym(Eigen::MatrixXd::Ones(30, 30));
  CHECK(j.values(29) == doctest::Approx(30.0));
  CHECK(std::abs(j.values(0)) < 1e-12);
}

TEST_CASE("spectrum of example graphs") {
  check_values(spectrum_of(parse_graph6("Ch")), {0, 2 - kSqrt2, 2, 2 + kSqrt2}, 1e-9);
  check_values(spectrum_of(token_graph(parse_graph6("Ch"), 2).graph),
               {0, 2 - kSqrt2, 3 - kSqrt3, 2, 2 + kSqrt2, 3 + kSqrt3}, 1e-9);
  check_values(spectrum_of(Graph(1)), {0}, 1e-12);
  check_values(spectrum_of(make_family({family::Cycle{6}})), {0, 1, 1, 3, 3, 4}, 1e-9);

  const Spectrum j42 = spectrum_of(make_family({family::Johnson{4, 2}}));
  REQUIRE(j42.groups().size() == 3);
  CHECK(j42.groups()[1].value == doctest::Approx(4.0));
  CHECK(j42.groups()[1].multiplicity == 3);
  CHECK(j42.groups()[2].multiplicity == 2);
  CHECK(j42.to_string() == "{0, 4^3, 6^2}");
}

TEST_CASE("spectrum invariants against Eigen on random graphs") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(3 + trial % 9, 0.4, rng);
    const Spectrum s = spectrum_of(g);
    const Eigen::MatrixXd l = laplacian(g).to_dense<double>();
    const Eigen::VectorXd oracle = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(l).eigenvalues();
    const std::vector<double> got = s.values();
    REQUIRE(static_cast<Eigen::Index>(got.size()) == oracle.size());
    for (Eigen::Index i = 0; i < oracle.size(); ++i) CHECK(std::abs(got[i] - oracle(i)) < 1e-8);
    CHECK(s.dimension() == g.order());
    CHECK(std::abs(s.sum() - l.trace()) < 1e-6 * (1 + l.trace()));
    double squares = 0;
    for (double x : got) squares += x * x;
    CHECK(std::abs(squares - (l * l).trace()) < 1e-6 * (1 + (l * l).trace()));
    for (std::size_t i = 1; i < s.groups().size(); ++i) {
      CHECK(s.groups()[i].value - s.groups()[i - 1].value > s.group_tol());
    }
  }
}

TEST_CASE("spectrum containment") {
  const Graph g = example_five();
  const Spectrum s1 = spectrum_of(g);
  const Spectrum s2 = spectrum_of(token_graph(g, 2).graph);
  check_values(s1, {0, 2, 3, 4, 5}, 1e-8);
  check_values(s2, {0, 2, 3, 3, 4, 5, 5, 5, 7, 8}, 1e-8);
  CHECK(spectrum_contains(s1, s2, 1e-7));
  CHECK(spectrum_contains(s2, s2, 1e-7));
  CHECK_FALSE(spectrum_contains(Spectrum::from_values(std::vector<double>{0, 2}, 1e-9),
                                Spectrum::from_values(std::vector<double>{0, 3, 3}, 1e-9), 1e-7));
  // Multiplicity matters.
  CHECK_FALSE(spectrum_contains(Spectrum::from_values(std::vector<double>{1, 1}, 1e-9),
                                Spectrum::from_values(std::vector<double>{1, 2}, 1e-9), 1e-7));
}

TEST_CASE("containment chain for connected graphs up to six vertices") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_nonisomorphic_graphs(n)) {
      std::vector<Spectrum> levels{Spectrum{}};
      for (int k = 1; 2 * k <= n; ++k) levels.push_back(spectrum_of(token_graph(g, k).graph));
      for (int k = 1; 2 * k <= n; ++k) {
        for (int h = 1; h <= k; ++h) REQUIRE(spectrum_contains(levels[h], levels[k], 1e-7));
      }
    }
  }
}

TEST_CASE("lifting eigenvectors") {
  const Graph g = example_five();
  const Eigen::VectorXd v = vec({1, 0, -2, 0, 1});
  CHECK((laplacian(g).apply(v) - 2 * v).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::VectorXd lifted = lift_vector(v, 5, 1, 2);
  const SparseIntMatrix l2 = laplacian(token_graph(g, 2).graph);
  CHECK((l2.apply(lifted) - 2 * lifted).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(lifted.cwiseAbs().maxCoeff() > 0);

  const Eigen::VectorXd p4v = vec({1, -1, -1, 1});
  const Eigen::VectorXd p4lift = lift_vector(p4v, 4, 1, 2);
  CHECK(p4lift == vec({0, 0, 2, -2, 0, 0}));
  const SparseIntMatrix p4l2 = laplacian(token_graph(parse_graph6("Ch"), 2).graph);
  CHECK(p4l2.apply(p4lift) == 2 * p4lift);

  CHECK(lift_vector(Eigen::VectorXd::Ones(6), 6, 1, 3) == 3 * Eigen::VectorXd::Ones(20));
}

TEST_CASE("lifted eigenbases stay eigenvectors and stay orthogonal") {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      for (int k = 2; 2 * k <= n; ++k) {
        for (int h = 1; h < k; ++h) {
          const Eigen::MatrixXd lh = laplacian(token_graph(g, h).graph).to_dense<double>();
          const SparseIntMatrix lk = laplacian(token_graph(g, k).graph);
          const EigenDecomposition d = eigh_sym(lh);
          for (Eigen::Index i = 0; i < d.values.size(); ++i) {
            const Eigen::VectorXd w = lift_vector(d.vectors.col(i), n, h, k);
            const double lambda = d.values(i);
            REQUIRE((lk.apply(w) - lambda * w).cwiseAbs().maxCoeff() <= 1e-7 * (1 + lambda));
          }
        }
        // Lifts of an orthonormal basis of the embeddings have Gram matrix
        // C(n-2,k-1) I.
        const EigenDecomposition d1 = eigh_sym(laplacian(g).to_dense<double>());
        Eigen::MatrixXd u(n, n - 1);
        Eigen::Index col = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
          if (std::abs(d1.vectors.col(i).sum()) < 1e-8) u.col(col++) = d1.vectors.col(i);
          if (col == n - 1) break;
        }
        if (col == n - 1) {
          Eigen::MatrixXd bu(binom(n, k), n - 1);
          for (Eigen::Index i = 0; i < n - 1; ++i) bu.col(i) = lift_vector(u.col(i), n, 1, k);
          const Eigen::MatrixXd expected =
              static_cast<double>(binom(n - 2, k - 1)) * Eigen::MatrixXd::Identity(n - 1, n - 1);
          REQUIRE((bu.transpose() * bu - expected).cwiseAbs().maxCoeff() < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("projection") {
  const Graph p4 = parse_graph6("Ch");
  const Eigen::VectorXd v = vec({1, -1, -1, 1});
  const auto back = project_vector(lift_vector(v, 4, 1, 2), 4, 1, 2);
  REQUIRE(back.has_value());
  CHECK((*back - binom(2, 1) * v).cwiseAbs().maxCoeff() < 1e-12);

  const auto ones = project_vector(Eigen::VectorXd::Ones(10), 5, 1, 2);
  REQUIRE(ones.has_value());
  CHECK(*ones == binom(4, 1) * Eigen::VectorXd::Ones(5));

  // The 3 - sqrt(3) eigenvector of F_2(P_4) lies in the kernel of B^T.
  const EigenDecomposition d =
      eigh_sym(laplacian(token_graph(p4, 2).graph).to_dense<double>());
  Eigen::Index idx = 0;
  (d.values.array() - (3 - kSqrt3)).abs().minCoeff(&idx);
  const Eigen::VectorXd w = d.vectors.col(idx);
  CHECK_FALSE(project_vector(w, 4, 1, 2).has_value());

  const auto [with, without] = restriction_embeddings(w, 4, 2, 3);
  CHECK(with.size() == 3);
  CHECK(without.size() == 3);
  CHECK(std::abs(with.sum()) < 1e-9);
  CHECK(std::abs(without.sum()) < 1e-9);
  CHECK_NOTHROW(Embedding{with});

  const auto [z1, z2] = restriction_embeddings(Eigen::VectorXd::Zero(6), 4, 2, 0);
  CHECK(z1.isZero());
  CHECK(z2.isZero());

  try {
    restriction_embeddings(lift_vector(v, 4, 1, 2), 4, 2, 0);
    FAIL("expected a kernel violation");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("not in the kernel of B^T") != std::string::npos);
  }
}

TEST_CASE("algebraic connectivity") {
  CHECK(algebraic_connectivity(parse_graph6("Ch")) == doctest::Approx(2 - kSqrt2).epsilon(1e-12));
  for (int n = 2; n <= 8; ++n) {
    CHECK(algebraic_connectivity(make_family({family::Complete{n}})) ==
          doctest::Approx(n).epsilon(1e-12));
    CHECK(algebraic_connectivity(make_family({family::Path{n}})) ==
          doctest::Approx(2 * (1 - std::cos(std::numbers::pi / n))).epsilon(1e-12));
  }
  CHECK(algebraic_connectivity(Graph(1)) == 0.0);
  CHECK(algebraic_connectivity(Graph(4)) == 0.0);
  CHECK(algebraic_connectivity(complement(triangle_with_pendant())) == 0.0);
}

TEST_CASE("Rayleigh quotients") {
  const Graph p4 = parse_graph6("Ch");
  const EigenDecomposition d = eigh_sym(laplacian(p4).to_dense<double>());
  const Embedding fiedler{Eigen::VectorXd(d.vectors.col(1))};
  CHECK(rayleigh(laplacian(p4), fiedler) == doctest::Approx(2 - kSqrt2).epsilon(1e-12));
  CHECK(rayleigh(p4, fiedler) == doctest::Approx(2 - kSqrt2).epsilon(1e-12));

  const Embedding v{vec({1, 0, -2, 0, 1})};
  CHECK(rayleigh(example_five(), v) == doctest::Approx(2.0));
  CHECK(rayleigh(make_family({family::Complete{2}}), Embedding{vec({1, -1})}) ==
        doctest::Approx(2.0));
  CHECK_THROWS_AS(Embedding(vec({1, 1})), InvalidArgument);

  std::mt19937_64 rng(12);
  std::normal_distribution<double> normal;
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_nonisomorphic_graphs(n)) {
      const double alpha = algebraic_connectivity(g);
      for (int trial = 0; trial < 100; ++trial) {
        Eigen::VectorXd x(n);
        for (int i = 0; i < n; ++i) x(i) = normal(rng);
        x.array() -= x.mean();
        REQUIRE(alpha <= rayleigh(g, Embedding(x)) + 1e-12);
      }
    }
  }
}

TEST_CASE("complement pairing") {
  const Graph g = triangle_with_pendant();
  const PairingResult p = pairing_decomposition(g, 2);
  REQUIRE(p.triples.size() == 6);
  CHECK(p.max_residual <= kPairingTol);
  CHECK(p.sums_match_johnson);
  check_values(spectrum_of(token_graph(complement(g), 2).graph), {0, 0, 1, 1, 3, 3}, 1e-8);

  const PairingResult kn = pairing_decomposition(make_family({family::Complete{5}}), 2);
  CHECK(kn.sums_match_johnson);
  for (const PairTriple& t : kn.triples) {
    CHECK(std::abs(t.lambda_complement) < 1e-9);
    CHECK(t.lambda_johnson == doctest::Approx(t.lambda_graph));
  }

  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 10; ++trial) {
    const PairingResult r = pairing_decomposition(random_graph(5, 0.5, rng), 2);
    CHECK(r.triples.size() == 10);
    CHECK(r.sums_match_johnson);
    CHECK(r.max_residual <= kPairingTol);
  }
}

TEST_CASE("complement pairing over all graphs up to six vertices") {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      for (int k : {2, 3}) {
        if (k > n - 1) continue;
        const PairingResult r = pairing_decomposition(g, k);
        REQUIRE(static_cast<std::int64_t>(r.triples.size()) == binom(n, k));
        REQUIRE(r.max_residual <= kPairingTol);
        REQUIRE(r.sums_match_johnson);
      }
    }
  }
}

TEST_CASE("integer eigenvalue bound") {
  const IntegerEigenvalueBound b = integer_eigenvalue_bound(triangle_with_pendant(), 2);
  CHECK(b.bound == 2);
  CHECK(b.holds);

  // Complement is 2K_3: three ways to split two tokens over two components.
  const Graph k33 = make_family({family::CompleteBipartite{3, 3}});
  const IntegerEigenvalueBound c = integer_eigenvalue_bound(k33, 2);
  CHECK(c.bound == 3);
  CHECK(c.holds);

  const IntegerEigenvalueBound kn = integer_eigenvalue_bound(make_family({family::Complete{6}}), 2);
  CHECK(kn.count == 15);
  CHECK(kn.holds);
}

TEST_CASE("star token graphs") {
  CHECK(verify_star_isomorphism(2, 4).holds);
  CHECK(verify_star_isomorphism(3, 6).holds);
  CHECK(verify_star_isomorphism(2, 5).holds);
  CHECK(verify_star_isomorphism(1, 5).holds);
  CHECK(token_graph(make_family({family::Star{5}}), 1).graph == make_family({family::Star{5}}));

  const Graph f36 = token_graph(make_family({family::Star{6}}), 3).graph;
  CHECK(f36.order() == 20);
  CHECK(is_bipartite(f36));
  for (int v = 0; v < 20; ++v) CHECK(f36.degree(v) == 3);
}

TEST_CASE("isomorphism checker rejects bad maps") {
  const Graph p3 = make_family({family::Path{3}});
  CHECK(check_isomorphism(p3, p3, {0, 1, 2}).holds);
  CHECK(check_isomorphism(p3, p3, {2, 1, 0}).holds);
  CHECK_FALSE(check_isomorphism(p3, p3, {1, 0, 2}).holds);
  CHECK_FALSE(check_isomorphism(p3, p3, {0, 0, 2}).holds);
  CHECK_FALSE(check_isomorphism(p3, p3, {1, 0, 2}).witness.empty());
}
