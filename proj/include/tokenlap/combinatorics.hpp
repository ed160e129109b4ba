#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "tokenlap/sparse_int_matrix.hpp"

namespace tokenlap {

/// Exact binomial coefficient; 0 when k < 0 or k > n. Throws OverflowError
/// if the value does not fit in 64 bits.
std::int64_t binom(std::int64_t n, std::int64_t k);

/// Subset of a ground set of at most 64 elements, element i <-> bit i.
struct VertexSubset {
  std::uint64_t bits = 0;

  static VertexSubset from_elements(const std::vector<int>& elements);

  int size() const noexcept { return std::popcount(bits); }
  bool contains(int i) const noexcept { return (bits >> i) & 1U; }
  VertexSubset with(int i) const noexcept { return {bits | (std::uint64_t{1} << i)}; }
  VertexSubset without(int i) const noexcept { return {bits & ~(std::uint64_t{1} << i)}; }
  std::vector<int> elements() const;
  /// 1-based label, e.g. "{1,3}".
  std::string label() const;

  friend bool operator==(VertexSubset, VertexSubset) = default;
  friend auto operator<=>(VertexSubset, VertexSubset) = default;
};

/// Lexicographic ranking of the k-subsets of {0..n-1}.
class SubsetIndex {
 public:
  SubsetIndex(int n, int k);

  int ground_size() const noexcept { return n_; }
  int subset_size() const noexcept { return k_; }
  std::int64_t size() const noexcept { return size_; }

  std::int64_t rank(VertexSubset s) const;
  VertexSubset unrank(std::int64_t index) const;

  /// All k-subsets in rank order.
  std::vector<VertexSubset> subsets() const;

  friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;

 private:
  std::int64_t choose(int n, int k) const;

  int n_;
  int k_;
  std::int64_t size_;
  std::vector<std::int64_t> table_;  // (n_+1) x (k_+1) Pascal triangle
};

/// The 0/1 matrix with rows indexed by k2-subsets, columns by k1-subsets of
/// [n] (both in lex order), entry 1 iff the column set lies in the row set.
/// With k1 = 1 this is the matrix whose rows are characteristic vectors.
SparseIntMatrix inclusion_matrix(int n, int k2, int k1);

}  // namespace tokenlap
