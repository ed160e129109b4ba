#include "tokenlap/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tokenlap/eigensolver.hpp"
#include "tokenlap/token_graph.hpp"

namespace tokenlap {

Spectrum Spectrum::from_values(std::vector<double> values, double group_tol) {
  std::sort(values.begin(), values.end());
  Spectrum s;
  s.group_tol_ = group_tol;
  double sum = 0.0;
  double last = 0.0;
  for (double x : values) {
    if (s.groups_.empty() || x - last > group_tol) {
      if (!s.groups_.empty()) s.groups_.back().value = sum / s.groups_.back().multiplicity;
      s.groups_.push_back({x, 0});
      sum = 0.0;
    }
    ++s.groups_.back().multiplicity;
    sum += x;
    last = x;
  }
  if (!s.groups_.empty()) s.groups_.back().value = sum / s.groups_.back().multiplicity;
  return s;
}

Spectrum Spectrum::from_values(const Eigen::VectorXd& values, double group_tol) {
  return from_values(std::vector<double>(values.data(), values.data() + values.size()), group_tol);
}

int Spectrum::dimension() const {
  int d = 0;
  for (const auto& g : groups_) d += g.multiplicity;
  return d;
}

double Spectrum::sum() const {
  double s = 0.0;
  for (const auto& g : groups_) s += g.value * g.multiplicity;
  return s;
}

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(dimension()));
  for (const auto& g : groups_) out.insert(out.end(), static_cast<std::size_t>(g.multiplicity), g.value);
  return out;
}

std::string Spectrum::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (i > 0) os << ", ";
    const double v = std::abs(groups_[i].value) < group_tol_ ? 0.0 : groups_[i].value;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    os << buf;
    if (groups_[i].multiplicity > 1) os << '^' << groups_[i].multiplicity;
  }
  os << '}';
  return os.str();
}

double default_group_tol(double max_abs_entry, Eigen::Index dimension) {
  return 1e-8 * std::max(1.0, max_abs_entry * static_cast<double>(dimension));
}

Spectrum spectrum_of_matrix(const SparseIntMatrix& m) {
  const SymmetricEigenSolver<double> es(m.to_dense<double>());
  return Spectrum::from_values(es.eigenvalues(),
                               default_group_tol(static_cast<double>(m.max_abs()), m.rows()));
}

Eigen::VectorXd laplacian_eigenvalues(const Graph& g) {
  return SymmetricEigenSolver<double>(laplacian(g).to_dense<double>()).eigenvalues();
}

Spectrum spectrum_of(const Graph& g) { return spectrum_of_matrix(laplacian(g)); }

Spectrum adjacency_spectrum_of(const Graph& g) { return spectrum_of_matrix(adjacency(g)); }

bool spectrum_contains(const Spectrum& small, const Spectrum& big, double tol) {
  const auto a = small.values();
  const auto b = big.values();
  std::size_t j = 0;
  for (double x : a) {
    while (j < b.size() && b[j] < x - tol) ++j;
    if (j == b.size() || b[j] > x + tol) return false;
    ++j;
  }
  return true;
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
  return a.dimension() == b.dimension() && spectrum_contains(a, b, tol) &&
         spectrum_contains(b, a, tol);
}

}  // namespace tokenlap
