#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tokenlap {

/// Overflow-checked 64-bit arithmetic; throws OverflowError instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

struct MatrixEntry {
  std::int64_t col;
  std::int64_t value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// First position (row-major) where two equally sized matrices disagree.
struct Discrepancy {
  std::int64_t row;
  std::int64_t col;
  std::int64_t lhs;
  std::int64_t rhs;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

/// Exact integer matrix in compressed-row form. Rows hold their nonzero
/// entries sorted by column; zeros are never stored.
class SparseIntMatrix {
 public:
  class Builder;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::int64_t rows, std::int64_t cols);

  static SparseIntMatrix identity(std::int64_t n);
  static SparseIntMatrix ones(std::int64_t rows, std::int64_t cols);
  static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);

  std::int64_t rows() const noexcept { return rows_; }
  std::int64_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }

  std::span<const MatrixEntry> row(std::int64_t r) const {
    return {entries_.data() + row_start_[r], entries_.data() + row_start_[r + 1]};
  }
  std::int64_t coeff(std::int64_t r, std::int64_t c) const;

  SparseIntMatrix transpose() const;
  SparseIntMatrix scaled(std::int64_t factor) const;
  bool is_symmetric() const;
  std::int64_t max_abs() const;
  std::vector<std::vector<std::int64_t>> to_dense_rows() const;

  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> to_dense() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(rows_, cols_);
    for (std::int64_t r = 0; r < rows_; ++r) {
      for (const auto& e : row(r)) m(r, e.col) = static_cast<Scalar>(e.value);
    }
    return m;
  }

  /// this * v for a dense real vector.
  template <typename Derived>
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> apply(
      const Eigen::MatrixBase<Derived>& v) const {
    using Scalar = typename Derived::Scalar;
    check_apply(v.size(), cols_);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(rows_);
    for (std::int64_t r = 0; r < rows_; ++r) {
      Scalar acc(0);
      for (const auto& e : row(r)) acc += static_cast<Scalar>(e.value) * v(e.col);
      out(r) = acc;
    }
    return out;
  }

  /// this^T * v without materializing the transpose.
  template <typename Derived>
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> apply_transpose(
      const Eigen::MatrixBase<Derived>& v) const {
    using Scalar = typename Derived::Scalar;
    check_apply(v.size(), rows_);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out =
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(cols_);
    for (std::int64_t r = 0; r < rows_; ++r) {
      for (const auto& e : row(r)) out(e.col) += static_cast<Scalar>(e.value) * v(r);
    }
    return out;
  }

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  static void check_apply(std::int64_t got, std::int64_t want);

  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<std::size_t> row_start_{0};
  std::vector<MatrixEntry> entries_;
};

/// Collects (row, col, value) triplets; duplicates are summed (checked) and
/// zero results dropped.
class SparseIntMatrix::Builder {
 public:
  Builder(std::int64_t rows, std::int64_t cols);
  void add(std::int64_t r, std::int64_t c, std::int64_t value);
  SparseIntMatrix build() &&;

 private:
  struct Triplet {
    std::int64_t row;
    std::int64_t col;
    std::int64_t value;
  };
  std::int64_t rows_;
  std::int64_t cols_;
  std::vector<Triplet> triplets_;
};

std::optional<Discrepancy> first_difference(const SparseIntMatrix& lhs,
                                            const SparseIntMatrix& rhs);

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::int64_t exact_rank(const SparseIntMatrix& a);

/// Solves a * X = b exactly for square nonsingular `a`, via fraction-free
/// Gauss-Jordan elimination. Throws NumericalError when `a` is singular or
/// the solution is not integral.
SparseIntMatrix exact_solve(const SparseIntMatrix& a, const SparseIntMatrix& b);

}  // namespace tokenlap
