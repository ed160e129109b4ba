#include "tokenlap/combinatorics.hpp"

#include <sstream>

#include "tokenlap/error.hpp"

namespace tokenlap {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InvalidArgument("binom requires n >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // result_i = C(n-k+i, i) stays integral at every step.
  __extension__ __int128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > INT64_MAX) {
      throw OverflowError("binom(" + std::to_string(n) + "," + std::to_string(k) +
                          ") exceeds 64 bits");
    }
  }
  return static_cast<std::int64_t>(result);
}

VertexSubset VertexSubset::from_elements(const std::vector<int>& elements) {
  VertexSubset s;
  for (int e : elements) {
    if (e < 0 || e >= 64) throw InvalidArgument("subset element out of range");
    s = s.with(e);
  }
  return s;
}

std::vector<int> VertexSubset::elements() const {
  std::vector<int> out;
  for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string VertexSubset::label() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

SubsetIndex::SubsetIndex(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > 64) throw InvalidArgument("subset ground set size must be in [1, 64]");
  if (k < 0 || k > n) throw InvalidArgument("subset size out of range");
  table_.assign(static_cast<std::size_t>(n + 1) * (k + 1), 0);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= k; ++b) table_[a * (k + 1) + b] = binom(a, b);
  }
  size_ = choose(n, k);
}

std::int64_t SubsetIndex::choose(int n, int k) const {
  if (k < 0 || k > n) return 0;
  return table_[n * (k_ + 1) + k];
}

std::int64_t SubsetIndex::rank(VertexSubset s) const {
  if (s.size() != k_) {
    throw InvalidArgument("subset has " + std::to_string(s.size()) + " elements, expected " +
                          std::to_string(k_));
  }
  if (n_ < 64 && (s.bits >> n_) != 0) throw InvalidArgument("subset element outside [n]");
  // Count the subsets that precede s: at slot i, every x between the previous
  // element and the current one could have been chosen instead.
  std::int64_t r = 0;
  int prev = -1;
  int slot = 0;
  for (int c : s.elements()) {
    for (int x = prev + 1; x < c; ++x) r += choose(n_ - 1 - x, k_ - 1 - slot);
    prev = c;
    ++slot;
  }
  return r;
}

VertexSubset SubsetIndex::unrank(std::int64_t index) const {
  if (index < 0 || index >= size_) {
    throw InvalidArgument("subset index " + std::to_string(index) + " out of range");
  }
  VertexSubset s;
  int x = 0;
  for (int slot = 0; slot < k_; ++slot) {
    for (;; ++x) {
      const std::int64_t block = choose(n_ - 1 - x, k_ - 1 - slot);
      if (index < block) break;
      index -= block;
    }
    s = s.with(x);
    ++x;
  }
  return s;
}

std::vector<VertexSubset> SubsetIndex::subsets() const {
  std::vector<VertexSubset> out;
  out.reserve(static_cast<std::size_t>(size_));
  std::vector<int> c(k_);
  for (int i = 0; i < k_; ++i) c[i] = i;
  while (true) {
    out.push_back(VertexSubset::from_elements(c));
    int i = k_ - 1;
    while (i >= 0 && c[i] == n_ - k_ + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k_; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

SparseIntMatrix inclusion_matrix(int n, int k2, int k1) {
  if (!(1 <= k1 && k1 <= k2 && k2 <= n - 1)) {
    throw InvalidArgument("inclusion_matrix requires 1 <= k1 <= k2 <= n-1");
  }
  const SubsetIndex rows(n, k2);
  const SubsetIndex cols(n, k1);
  SparseIntMatrix::Builder builder(rows.size(), cols.size());
  std::int64_t r = 0;
  for (VertexSubset a : rows.subsets()) {
    const auto members = a.elements();
    // k1-subsets of a, as positions into `members`.
    std::vector<int> pick(k1);
    for (int i = 0; i < k1; ++i) pick[i] = i;
    while (true) {
      VertexSubset x;
      for (int p : pick) x = x.with(members[p]);
      builder.add(r, cols.rank(x), 1);
      int i = k1 - 1;
      while (i >= 0 && pick[i] == k2 - k1 + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k1; ++j) pick[j] = pick[j - 1] + 1;
    }
    ++r;
  }
  return std::move(builder).build();
}

}  // namespace tokenlap
