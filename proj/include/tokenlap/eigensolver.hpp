#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "tokenlap/error.hpp"

namespace tokenlap {

/// Dense symmetric eigensolver: Householder reduction to tridiagonal form
/// followed by implicit-shift QL iteration. Eigenvalues come out ascending,
/// eigenvectors as the matching orthonormal columns.
///
/// Usage mirrors Eigen's own solvers:
///
///   SymmetricEigenSolver<double> es(m);
///   es.eigenvalues(); es.eigenvectors();
template <typename Scalar>
class SymmetricEigenSolver {
 public:
  using MatrixType = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using VectorType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  static constexpr Eigen::Index kMaxDimension = 4000;
  static constexpr int kSweepsPerEigenvalue = 50;

  SymmetricEigenSolver() = default;
  explicit SymmetricEigenSolver(const MatrixType& m) { compute(m); }

  SymmetricEigenSolver& compute(const MatrixType& m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw InvalidArgument("eigensolver needs a square matrix");
    if (n > kMaxDimension) {
      throw CapExceeded("matrix dimension " + std::to_string(n) + " exceeds the dense cap of " +
                        std::to_string(kMaxDimension));
    }
    const Scalar scale = std::max(Scalar(1), n == 0 ? Scalar(0) : m.cwiseAbs().maxCoeff());
    if (n > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-12) * scale) {
      throw InvalidArgument("eigensolver input is not symmetric");
    }
    vectors_ = m;
    values_.resize(n);
    off_.resize(n);
    if (n == 0) return *this;
    tridiagonalize();
    diagonalize();
    sort_ascending();
    return *this;
  }

  const VectorType& eigenvalues() const noexcept { return values_; }
  const MatrixType& eigenvectors() const noexcept { return vectors_; }

 private:
  // Householder reduction; on exit values_ holds the diagonal, off_ the
  // subdiagonal (off_(0) unused) and vectors_ the accumulated transform.
  void tridiagonalize() {
    MatrixType& v = vectors_;
    VectorType& d = values_;
    VectorType& e = off_;
    const Eigen::Index n = v.rows();
    for (Eigen::Index j = 0; j < n; ++j) d(j) = v(n - 1, j);

    for (Eigen::Index i = n - 1; i > 0; --i) {
      Scalar scale(0);
      Scalar h(0);
      for (Eigen::Index k = 0; k < i; ++k) scale += std::abs(d(k));
      if (scale == Scalar(0)) {
        e(i) = d(i - 1);
        for (Eigen::Index j = 0; j < i; ++j) {
          d(j) = v(i - 1, j);
          v(i, j) = Scalar(0);
          v(j, i) = Scalar(0);
        }
      } else {
        for (Eigen::Index k = 0; k < i; ++k) {
          d(k) /= scale;
          h += d(k) * d(k);
        }
        Scalar f = d(i - 1);
        Scalar g = std::sqrt(h);
        if (f > 0) g = -g;
        e(i) = scale * g;
        h -= f * g;
        d(i - 1) = f - g;
        for (Eigen::Index j = 0; j < i; ++j) e(j) = Scalar(0);

        for (Eigen::Index j = 0; j < i; ++j) {
          f = d(j);
          v(j, i) = f;
          g = e(j) + v(j, j) * f;
          for (Eigen::Index k = j + 1; k <= i - 1; ++k) {
            g += v(k, j) * d(k);
            e(k) += v(k, j) * f;
          }
          e(j) = g;
        }
        f = Scalar(0);
        for (Eigen::Index j = 0; j < i; ++j) {
          e(j) /= h;
          f += e(j) * d(j);
        }
        const Scalar hh = f / (h + h);
        for (Eigen::Index j = 0; j < i; ++j) e(j) -= hh * d(j);
        for (Eigen::Index j = 0; j < i; ++j) {
          f = d(j);
          g = e(j);
          for (Eigen::Index k = j; k <= i - 1; ++k) v(k, j) -= (f * e(k) + g * d(k));
          d(j) = v(i - 1, j);
          v(i, j) = Scalar(0);
        }
      }
      d(i) = h;
    }

    for (Eigen::Index i = 0; i < n - 1; ++i) {
      v(n - 1, i) = v(i, i);
      v(i, i) = Scalar(1);
      const Scalar h = d(i + 1);
      if (h != Scalar(0)) {
        for (Eigen::Index k = 0; k <= i; ++k) d(k) = v(k, i + 1) / h;
        for (Eigen::Index j = 0; j <= i; ++j) {
          Scalar g(0);
          for (Eigen::Index k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
          for (Eigen::Index k = 0; k <= i; ++k) v(k, j) -= g * d(k);
        }
      }
      for (Eigen::Index k = 0; k <= i; ++k) v(k, i + 1) = Scalar(0);
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      d(j) = v(n - 1, j);
      v(n - 1, j) = Scalar(0);
    }
    v(n - 1, n - 1) = Scalar(1);
    e(0) = Scalar(0);
  }

  // Implicit-shift QL on the tridiagonal form, rotating vectors_ along.
  void diagonalize() {
    MatrixType& v = vectors_;
    VectorType& d = values_;
    VectorType& e = off_;
    const Eigen::Index n = v.rows();
    for (Eigen::Index i = 1; i < n; ++i) e(i - 1) = e(i);
    e(n - 1) = Scalar(0);

    Scalar shift_sum(0);
    Scalar tst1(0);
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    for (Eigen::Index l = 0; l < n; ++l) {
      tst1 = std::max(tst1, std::abs(d(l)) + std::abs(e(l)));
      Eigen::Index m = l;
      while (m < n - 1 && std::abs(e(m)) > eps * tst1) ++m;

      if (m > l) {
        int sweeps = 0;
        do {
          if (++sweeps > kSweepsPerEigenvalue) {
            throw NumericalError("QL iteration did not converge for eigenvalue " +
                                 std::to_string(l));
          }
          Scalar g = d(l);
          Scalar p = (d(l + 1) - g) / (Scalar(2) * e(l));
          Scalar r = std::hypot(p, Scalar(1));
          if (p < 0) r = -r;
          d(l) = e(l) / (p + r);
          d(l + 1) = e(l) * (p + r);
          const Scalar dl1 = d(l + 1);
          Scalar h = g - d(l);
          for (Eigen::Index i = l + 2; i < n; ++i) d(i) -= h;
          shift_sum += h;

          p = d(m);
          Scalar c(1), c2(1), c3(1);
          const Scalar el1 = e(l + 1);
          Scalar s(0), s2(0);
          for (Eigen::Index i = m - 1; i >= l; --i) {
            c3 = c2;
            c2 = c;
            s2 = s;
            g = c * e(i);
            h = c * p;
            r = std::hypot(p, e(i));
            e(i + 1) = s * r;
            s = e(i) / r;
            c = p / r;
            p = c * d(i) - s * g;
            d(i + 1) = h + s * (c * g + s * d(i));
            for (Eigen::Index k = 0; k < n; ++k) {
              h = v(k, i + 1);
              v(k, i + 1) = s * v(k, i) + c * h;
              v(k, i) = c * v(k, i) - s * h;
            }
          }
          p = -s * s2 * c3 * el1 * e(l) / dl1;
          e(l) = s * p;
          d(l) = c * p;
        } while (std::abs(e(l)) > eps * tst1);
      }
      d(l) += shift_sum;
      e(l) = Scalar(0);
    }
  }

  void sort_ascending() {
    const Eigen::Index n = values_.size();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return values_(a) < values_(b); });
    VectorType values(n);
    MatrixType vectors(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      values(i) = values_(order[i]);
      vectors.col(i) = vectors_.col(order[i]);
    }
    values_ = std::move(values);
    vectors_ = std::move(vectors);
  }

  VectorType values_;
  VectorType off_;
  MatrixType vectors_;
};

/// Eigenpairs of a real symmetric matrix, values ascending.
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

inline EigenDecomposition eigh_sym(const Eigen::MatrixXd& m) {
  SymmetricEigenSolver<double> es(m);
  return {es.eigenvalues(), es.eigenvectors()};
}

}  // namespace tokenlap
