#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tokenlap/spectrum.hpp"

namespace tokenlap {

struct IntEigenvalue {
  std::int64_t value;
  std::int64_t multiplicity;

  friend bool operator==(const IntEigenvalue&, const IntEigenvalue&) = default;
};

/// Integer eigenvalue multiset with exact multiplicities, ascending.
struct IntSpectrum {
  std::vector<IntEigenvalue> groups;

  std::int64_t dimension() const;
  /// Sum of multiplicity * value^power, overflow-checked.
  std::int64_t power_sum(int power) const;
  std::vector<std::int64_t> expanded() const;
  Spectrum to_spectrum() const;
  std::string to_string() const;

  friend bool operator==(const IntSpectrum&, const IntSpectrum&) = default;
};

/// Laplacian spectrum of J(n,k): j(n+1-j) with multiplicity C(n,j)-C(n,j-1),
/// j = 0..min(k, n-k).
IntSpectrum johnson_laplacian_spectrum(int n, int k);

/// Adjacency spectrum of the odd graph O_k: (-1)^j (k-j) with multiplicity
/// C(2k-1,j)-C(2k-1,j-1), j = 0..k-1.
IntSpectrum odd_adjacency_spectrum(int k);

/// Laplacian spectrum of the double odd graph 2O_k (k-regular): j and 2k-j,
/// each with multiplicity C(2k-1,j)-C(2k-1,j-1), j = 0..k-1. At k = 1 this is
/// K_2, the inclusion form of 2O_1.
IntSpectrum double_odd_laplacian_spectrum(int k);

/// Laplacian spectrum of F_k(S_2k), which is isomorphic to 2O_k.
IntSpectrum star_token_laplacian_spectrum(int k);

/// Adjacency spectrum of the double graph: every eigenvalue mu of the base
/// contributes both mu and -mu with its multiplicity.
Spectrum double_adjacency_spectrum(const Spectrum& base);

/// The listed Laplacian eigenvalues of the doubled Johnson graph J(n;k,k+1)
/// (distinct values only; multiplicities are not part of the list).
/// Requires k <= n/2 - 1 for even n, k <= (n-1)/2 for odd n.
std::vector<std::int64_t> doubled_johnson_laplacian_values(int n, int k);

/// Numeric spectrum of J(n;k,k+1) against the listed values.
struct DoubledJohnsonComparison {
  std::vector<std::int64_t> listed;
  Spectrum numeric;
  std::vector<double> unlisted;      // numeric distinct values missing from the list
  std::vector<std::int64_t> absent;  // listed values with no numeric match
  bool diverges() const { return !unlisted.empty() || !absent.empty(); }
};

DoubledJohnsonComparison compare_doubled_johnson(int n, int k, double tol = 1e-8);

namespace closed_form {

struct JohnsonLaplacian { int n; int k; };
struct OddAdjacency { int k; };
struct DoubleOf { Spectrum base; };
struct DoubleOddLaplacian { int k; };
struct DoubledJohnsonLaplacianValues { int n; int k; };
struct StarTokenLaplacian { int k; };

}  // namespace closed_form

using ClosedFormFamily =
    std::variant<closed_form::JohnsonLaplacian, closed_form::OddAdjacency, closed_form::DoubleOf,
                 closed_form::DoubleOddLaplacian, closed_form::DoubledJohnsonLaplacianValues,
                 closed_form::StarTokenLaplacian>;

struct ClosedFormResult {
  std::vector<double> values;
  /// Parallel to `values`; empty when only the value set is known.
  std::vector<std::int64_t> multiplicities;
};

ClosedFormResult closed_form_spectrum(const ClosedFormFamily& family);

}  // namespace tokenlap
