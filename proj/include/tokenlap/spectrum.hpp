#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "tokenlap/graph.hpp"
#include "tokenlap/sparse_int_matrix.hpp"

namespace tokenlap {

struct SpectrumGroup {
  double value;
  int multiplicity;
};

/// Eigenvalue multiset as ascending (value, multiplicity) groups. Sorted
/// eigenvalues closer than group_tol to their predecessor share a group; the
/// group value is the mean of its members, so the multiset sum is preserved.
class Spectrum {
 public:
  Spectrum() = default;

  static Spectrum from_values(std::vector<double> values, double group_tol);
  static Spectrum from_values(const Eigen::VectorXd& values, double group_tol);

  const std::vector<SpectrumGroup>& groups() const noexcept { return groups_; }
  double group_tol() const noexcept { return group_tol_; }

  int dimension() const;
  double sum() const;
  /// Expanded ascending list, one entry per multiplicity.
  std::vector<double> values() const;
  /// Like "{0, 2^3, 5}"; values printed with 12 significant digits.
  std::string to_string() const;

 private:
  std::vector<SpectrumGroup> groups_;
  double group_tol_ = 0.0;
};

/// 1e-8 * max(1, max|entry| * dimension).
double default_group_tol(double max_abs_entry, Eigen::Index dimension);

Eigen::VectorXd laplacian_eigenvalues(const Graph& g);
Spectrum spectrum_of(const Graph& g);
Spectrum adjacency_spectrum_of(const Graph& g);
Spectrum spectrum_of_matrix(const SparseIntMatrix& m);

/// True iff `small` injects into `big` as multisets, pairing values no more
/// than tol apart.
bool spectrum_contains(const Spectrum& small, const Spectrum& big, double tol);

/// Equal dimension and spectrum_contains in both directions.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol);

}  // namespace tokenlap
