#include "tokenlap/sparse_int_matrix.hpp"

#include <algorithm>
#include <string>

#include "tokenlap/error.hpp"

namespace tokenlap {
namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide x) {
  if (x > INT64_MAX || x < INT64_MIN) throw OverflowError("integer overflow in exact arithmetic");
  return static_cast<std::int64_t>(x);
}

void require_same_shape(const SparseIntMatrix& a, const SparseIntMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument(std::string(op) + ": dimension mismatch " + std::to_string(a.rows()) +
                          "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                          "x" + std::to_string(b.cols()));
  }
}

using DenseRows = std::vector<std::vector<std::int64_t>>;

// One fraction-free update: (pivot * x - lead * y) / prev, exact by Sylvester's identity.
std::int64_t bareiss_step(std::int64_t pivot, std::int64_t x, std::int64_t lead, std::int64_t y,
                          std::int64_t prev) {
  const Wide num = Wide{pivot} * x - Wide{lead} * y;
  if (num % prev != 0) throw NumericalError("inexact Bareiss division");
  return narrow(num / prev);
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

SparseIntMatrix::SparseIntMatrix(std::int64_t rows, std::int64_t cols)
    : rows_(rows), cols_(cols), row_start_(static_cast<std::size_t>(rows) + 1, 0) {
  if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
}

SparseIntMatrix SparseIntMatrix::identity(std::int64_t n) {
  Builder b(n, n);
  for (std::int64_t i = 0; i < n; ++i) b.add(i, i, 1);
  return std::move(b).build();
}

SparseIntMatrix SparseIntMatrix::ones(std::int64_t rows, std::int64_t cols) {
  Builder b(rows, cols);
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t j = 0; j < cols; ++j) b.add(i, j, 1);
  }
  return std::move(b).build();
}

SparseIntMatrix SparseIntMatrix::from_dense(const DenseRows& rows) {
  const std::int64_t r = static_cast<std::int64_t>(rows.size());
  const std::int64_t c = r == 0 ? 0 : static_cast<std::int64_t>(rows.front().size());
  Builder b(r, c);
  for (std::int64_t i = 0; i < r; ++i) {
    if (static_cast<std::int64_t>(rows[i].size()) != c) throw InvalidArgument("ragged dense rows");
    for (std::int64_t j = 0; j < c; ++j) b.add(i, j, rows[i][j]);
  }
  return std::move(b).build();
}

std::int64_t SparseIntMatrix::coeff(std::int64_t r, std::int64_t c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InvalidArgument("matrix index out of range");
  const auto entries = row(r);
  auto it = std::lower_bound(entries.begin(), entries.end(), c,
                             [](const MatrixEntry& e, std::int64_t col) { return e.col < col; });
  return (it != entries.end() && it->col == c) ? it->value : 0;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(cols_, rows_);
  std::vector<std::size_t> counts(static_cast<std::size_t>(cols_) + 1, 0);
  for (const auto& e : entries_) ++counts[e.col + 1];
  for (std::int64_t c = 0; c < cols_; ++c) counts[c + 1] += counts[c];
  t.row_start_ = counts;
  t.entries_.resize(entries_.size());
  for (std::int64_t r = 0; r < rows_; ++r) {
    for (const auto& e : row(r)) t.entries_[counts[e.col]++] = {r, e.value};
  }
  return t;
}

SparseIntMatrix SparseIntMatrix::scaled(std::int64_t factor) const {
  if (factor == 0) return SparseIntMatrix(rows_, cols_);
  SparseIntMatrix out = *this;
  for (auto& e : out.entries_) e.value = checked_mul(e.value, factor);
  return out;
}

bool SparseIntMatrix::is_symmetric() const { return rows_ == cols_ && transpose() == *this; }

std::int64_t SparseIntMatrix::max_abs() const {
  std::int64_t m = 0;
  for (const auto& e : entries_) m = std::max(m, e.value < 0 ? -e.value : e.value);
  return m;
}

DenseRows SparseIntMatrix::to_dense_rows() const {
  DenseRows out(static_cast<std::size_t>(rows_), std::vector<std::int64_t>(cols_, 0));
  for (std::int64_t r = 0; r < rows_; ++r) {
    for (const auto& e : row(r)) out[r][e.col] = e.value;
  }
  return out;
}

void SparseIntMatrix::check_apply(std::int64_t got, std::int64_t want) {
  if (got != want) {
    throw InvalidArgument("vector length " + std::to_string(got) + " does not match " +
                          std::to_string(want));
  }
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("product: inner dimensions " + std::to_string(a.cols()) + " and " +
                          std::to_string(b.rows()) + " differ");
  }
  SparseIntMatrix out(a.rows(), b.cols());
  std::vector<std::int64_t> acc(static_cast<std::size_t>(b.cols()), 0);
  std::vector<char> touched(static_cast<std::size_t>(b.cols()), 0);
  std::vector<std::int64_t> pattern;
  for (std::int64_t r = 0; r < a.rows(); ++r) {
    pattern.clear();
    for (const auto& ea : a.row(r)) {
      for (const auto& eb : b.row(ea.col)) {
        if (!touched[eb.col]) {
          touched[eb.col] = 1;
          pattern.push_back(eb.col);
        }
        acc[eb.col] = checked_add(acc[eb.col], checked_mul(ea.value, eb.value));
      }
    }
    std::sort(pattern.begin(), pattern.end());
    for (std::int64_t c : pattern) {
      if (acc[c] != 0) out.entries_.push_back({c, acc[c]});
      acc[c] = 0;
      touched[c] = 0;
    }
    out.row_start_[r + 1] = out.entries_.size();
  }
  return out;
}

namespace {

template <typename Combine>
SparseIntMatrix merge(const SparseIntMatrix& a, const SparseIntMatrix& b, Combine combine) {
  SparseIntMatrix::Builder builder(a.rows(), a.cols());
  for (std::int64_t r = 0; r < a.rows(); ++r) {
    for (const auto& e : a.row(r)) builder.add(r, e.col, e.value);
    for (const auto& e : b.row(r)) builder.add(r, e.col, combine(e.value));
  }
  return std::move(builder).build();
}

}  // namespace

SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  require_same_shape(a, b, "sum");
  return merge(a, b, [](std::int64_t v) { return v; });
}

SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  require_same_shape(a, b, "difference");
  return merge(a, b, [](std::int64_t v) { return checked_sub(0, v); });
}

SparseIntMatrix::Builder::Builder(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
}

void SparseIntMatrix::Builder::add(std::int64_t r, std::int64_t c, std::int64_t value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InvalidArgument("matrix index out of range");
  if (value != 0) triplets_.push_back({r, c, value});
}

SparseIntMatrix SparseIntMatrix::Builder::build() && {
  std::stable_sort(triplets_.begin(), triplets_.end(), [](const Triplet& x, const Triplet& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  });
  SparseIntMatrix m(rows_, cols_);
  std::size_t i = 0;
  for (std::int64_t r = 0; r < rows_; ++r) {
    while (i < triplets_.size() && triplets_[i].row == r) {
      const std::int64_t c = triplets_[i].col;
      std::int64_t sum = 0;
      for (; i < triplets_.size() && triplets_[i].row == r && triplets_[i].col == c; ++i) {
        sum = checked_add(sum, triplets_[i].value);
      }
      if (sum != 0) m.entries_.push_back({c, sum});
    }
    m.row_start_[r + 1] = m.entries_.size();
  }
  return m;
}

std::optional<Discrepancy> first_difference(const SparseIntMatrix& lhs,
                                            const SparseIntMatrix& rhs) {
  require_same_shape(lhs, rhs, "comparison");
  for (std::int64_t r = 0; r < lhs.rows(); ++r) {
    const auto a = lhs.row(r);
    const auto b = rhs.row(r);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      const std::int64_t ca = i < a.size() ? a[i].col : INT64_MAX;
      const std::int64_t cb = j < b.size() ? b[j].col : INT64_MAX;
      if (ca == cb) {
        if (a[i].value != b[j].value) return Discrepancy{r, ca, a[i].value, b[j].value};
        ++i;
        ++j;
      } else if (ca < cb) {
        return Discrepancy{r, ca, a[i].value, 0};
      } else {
        return Discrepancy{r, cb, 0, b[j].value};
      }
    }
  }
  return std::nullopt;
}

std::int64_t exact_rank(const SparseIntMatrix& a) {
  DenseRows m = a.to_dense_rows();
  const std::int64_t rows = a.rows();
  const std::int64_t cols = a.cols();
  std::int64_t prev = 1;
  std::int64_t rank = 0;
  for (std::int64_t c = 0; c < cols && rank < rows; ++c) {
    std::int64_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const std::int64_t pivot = m[rank][c];
    for (std::int64_t i = rank + 1; i < rows; ++i) {
      const std::int64_t lead = m[i][c];
      for (std::int64_t j = c + 1; j < cols; ++j) {
        m[i][j] = bareiss_step(pivot, m[i][j], lead, m[rank][j], prev);
      }
      m[i][c] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

SparseIntMatrix exact_solve(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  const std::int64_t n = a.rows();
  if (a.cols() != n) throw InvalidArgument("exact_solve requires a square matrix");
  if (b.rows() != n) throw InvalidArgument("exact_solve: right-hand side has wrong row count");
  const std::int64_t m = b.cols();
  const std::int64_t width = n + m;

  DenseRows aug(static_cast<std::size_t>(n), std::vector<std::int64_t>(width, 0));
  for (std::int64_t r = 0; r < n; ++r) {
    for (const auto& e : a.row(r)) aug[r][e.col] = e.value;
    for (const auto& e : b.row(r)) aug[r][n + e.col] = e.value;
  }

  // Fraction-free Gauss-Jordan: after step k every processed diagonal entry
  // equals the current leading minor.
  std::int64_t prev = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    std::int64_t p = k;
    while (p < n && aug[p][k] == 0) ++p;
    if (p == n) throw NumericalError("exact_solve: matrix is singular");
    std::swap(aug[p], aug[k]);
    const std::int64_t pivot = aug[k][k];
    for (std::int64_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const std::int64_t lead = aug[i][k];
      for (std::int64_t j = 0; j < width; ++j) {
        if (j == k) continue;
        aug[i][j] = bareiss_step(pivot, aug[i][j], lead, aug[k][j], prev);
      }
      aug[i][k] = 0;
    }
    prev = pivot;
  }

  const std::int64_t det = prev;
  SparseIntMatrix::Builder x(n, m);
  for (std::int64_t r = 0; r < n; ++r) {
    if (aug[r][r] != det) throw NumericalError("exact_solve: inconsistent elimination state");
    for (std::int64_t j = 0; j < m; ++j) {
      const std::int64_t v = aug[r][n + j];
      if (v % det != 0) throw NumericalError("exact_solve: solution is not integral");
      x.add(r, j, v / det);
    }
  }
  return std::move(x).build();
}

}  // namespace tokenlap
