#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "tokenlap/closed_form.hpp"
#include "tokenlap/combinatorics.hpp"
#include "tokenlap/enumerate.hpp"
#include "tokenlap/error.hpp"
#include "tokenlap/families.hpp"
#include "tokenlap/spectrum.hpp"
#include "tokenlap/token_graph.hpp"

using namespace tokenlap;

namespace {

Spectrum eigen_oracle(const SparseIntMatrix& m) {
  const Eigen::VectorXd values =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m.to_dense<double>()).eigenvalues();
  return Spectrum::from_values(values, 1e-8);
}

std::shared_ptr<const GraphFamilySpec> share(GraphFamilySpec spec) {
  return std::make_shared<const GraphFamilySpec>(std::move(spec));
}

}  // namespace

TEST_CASE("Johnson Laplacian closed form") {
  const IntSpectrum j147 = johnson_laplacian_spectrum(14, 7);
  CHECK(j147 == IntSpectrum{{{0, 1},
                             {14, 13},
                             {26, 77},
                             {36, 273},
                             {44, 637},
                             {50, 1001},
                             {54, 1001},
                             {56, 429}}});
  CHECK(j147.dimension() == 3432);
  CHECK(j147.power_sum(1) == 3432 * 49);
  CHECK(j147.power_sum(2) == 3432 * 49 * 50);
  CHECK(j147.to_string() == "{0^1, 14^13, 26^77, 36^273, 44^637, 50^1001, 54^1001, 56^429}");

  for (int n = 2; n <= 10; ++n) {
    CHECK(johnson_laplacian_spectrum(n, 1) == IntSpectrum{{{0, 1}, {n, n - 1}}});
  }
  CHECK(johnson_laplacian_spectrum(6, 4) == johnson_laplacian_spectrum(6, 2));
  CHECK_THROWS_AS(johnson_laplacian_spectrum(5, 0), InvalidArgument);
}

TEST_CASE("Johnson closed form against numeric spectra") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const Spectrum numeric = spectrum_of(make_family({family::Johnson{n, k}}));
      REQUIRE(spectra_equal(johnson_laplacian_spectrum(n, k).to_spectrum(), numeric, 1e-8));
      // Trace identities: every row has degree k(n-k).
      const IntSpectrum cf = johnson_laplacian_spectrum(n, k);
      const std::int64_t degree = static_cast<std::int64_t>(k) * (n - k);
      REQUIRE(cf.dimension() == binom(n, k));
      REQUIRE(cf.power_sum(1) == binom(n, k) * degree);
      REQUIRE(cf.power_sum(2) == binom(n, k) * degree * (degree + 1));
    }
  }
}

TEST_CASE("odd graph adjacency closed form") {
  CHECK(odd_adjacency_spectrum(3) == IntSpectrum{{{-2, 4}, {1, 5}, {3, 1}}});
  for (int k = 2; k <= 4; ++k) {
    const Graph odd = make_family({family::Odd{k}});
    CHECK(odd.order() == binom(2 * k - 1, k));
    REQUIRE(spectra_equal(odd_adjacency_spectrum(k).to_spectrum(), eigen_oracle(adjacency(odd)),
                          1e-8));
  }
  CHECK_THROWS_AS(odd_adjacency_spectrum(1), InvalidArgument);
}

TEST_CASE("double graph spectra are symmetric") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      const Spectrum s = adjacency_spectrum_of(double_graph(g));
      std::vector<double> values = s.values();
      std::vector<double> negated;
      for (auto it = values.rbegin(); it != values.rend(); ++it) negated.push_back(-*it);
      for (std::size_t i = 0; i < values.size(); ++i) {
        REQUIRE(std::abs(values[i] - negated[i]) < 1e-8);
      }
      REQUIRE(spectra_equal(double_adjacency_spectrum(adjacency_spectrum_of(g)), s, 1e-8));
    }
  }
}

TEST_CASE("double odd Laplacian closed form") {
  CHECK(double_odd_laplacian_spectrum(2) == IntSpectrum{{{0, 1}, {1, 2}, {3, 2}, {4, 1}}});
  CHECK(double_odd_laplacian_spectrum(1) == IntSpectrum{{{0, 1}, {2, 1}}});
  for (int k = 1; k <= 4; ++k) {
    const IntSpectrum cf = double_odd_laplacian_spectrum(k);
    REQUIRE(cf.dimension() == binom(2 * k, k));
    // At k = 1 the odd graph is a single looped vertex, so only the star
    // form (K_2) applies.
    if (k >= 2) {
      const Graph d = make_family({family::Double{share({family::Odd{k}})}});
      REQUIRE(spectra_equal(cf.to_spectrum(), eigen_oracle(laplacian(d)), 1e-8));
    }
    const Graph star = token_graph(make_family({family::Star{2 * k}}), k).graph;
    REQUIRE(spectra_equal(star_token_laplacian_spectrum(k).to_spectrum(),
                          eigen_oracle(laplacian(star)), 1e-8));
  }
}

TEST_CASE("doubled Johnson value lists and their divergence") {
  CHECK(doubled_johnson_laplacian_values(3, 1) == std::vector<std::int64_t>{0, 1, 3});
  CHECK(doubled_johnson_laplacian_values(6, 2) == std::vector<std::int64_t>{0, 1, 5, 6});
  CHECK_THROWS_AS(doubled_johnson_laplacian_values(6, 3), InvalidArgument);

  const DoubledJohnsonComparison c = compare_doubled_johnson(3, 1);
  const std::vector<double> numeric = c.numeric.values();
  const std::vector<double> expected{0, 1, 1, 3, 3, 4};
  REQUIRE(numeric.size() == expected.size());
  for (std::size_t i = 0; i < numeric.size(); ++i) CHECK(std::abs(numeric[i] - expected[i]) < 1e-8);
  CHECK(c.diverges());
  REQUIRE(c.unlisted.size() == 1);
  CHECK(c.unlisted[0] == doctest::Approx(4.0));
  CHECK(c.absent.empty());

  // J(3;1,2) is the double of the triangle, i.e. C_6.
  CHECK(spectra_equal(c.numeric, spectrum_of(make_family({family::Cycle{6}})), 1e-8));
}

TEST_CASE("closed form dispatcher") {
  const ClosedFormResult j = closed_form_spectrum(closed_form::JohnsonLaplacian{4, 2});
  CHECK(j.values == std::vector<double>{0, 4, 6});
  CHECK(j.multiplicities == std::vector<std::int64_t>{1, 3, 2});

  const ClosedFormResult dj =
      closed_form_spectrum(closed_form::DoubledJohnsonLaplacianValues{3, 1});
  CHECK(dj.values == std::vector<double>{0, 1, 3});
  CHECK(dj.multiplicities.empty());

  const ClosedFormResult d = closed_form_spectrum(
      closed_form::DoubleOf{adjacency_spectrum_of(make_family({family::Complete{3}}))});
  REQUIRE(d.values.size() == 4);
  CHECK(d.values[0] == doctest::Approx(-2.0));
  CHECK(d.multiplicities == std::vector<std::int64_t>{1, 2, 2, 1});

  CHECK(closed_form_spectrum(closed_form::StarTokenLaplacian{2}).values ==
        closed_form_spectrum(closed_form::DoubleOddLaplacian{2}).values);
  CHECK(closed_form_spectrum(closed_form::OddAdjacency{3}).multiplicities ==
        std::vector<std::int64_t>{4, 5, 1});
}
