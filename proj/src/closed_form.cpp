#include "tokenlap/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tokenlap/combinatorics.hpp"
#include "tokenlap/error.hpp"
#include "tokenlap/families.hpp"

namespace tokenlap {
namespace {

IntSpectrum normalized(std::vector<IntEigenvalue> groups) {
  std::sort(groups.begin(), groups.end(),
            [](const IntEigenvalue& a, const IntEigenvalue& b) { return a.value < b.value; });
  IntSpectrum out;
  for (const auto& g : groups) {
    if (g.multiplicity == 0) continue;
    if (!out.groups.empty() && out.groups.back().value == g.value) {
      out.groups.back().multiplicity = checked_add(out.groups.back().multiplicity, g.multiplicity);
    } else {
      out.groups.push_back(g);
    }
  }
  return out;
}

// C(m,j) - C(m,j-1): dimension of the j-th eigenspace in the Johnson scheme.
std::int64_t scheme_multiplicity(int m, int j) { return binom(m, j) - binom(m, j - 1); }

}  // namespace

std::int64_t IntSpectrum::dimension() const {
  std::int64_t d = 0;
  for (const auto& g : groups) d = checked_add(d, g.multiplicity);
  return d;
}

std::int64_t IntSpectrum::power_sum(int power) const {
  std::int64_t total = 0;
  for (const auto& g : groups) {
    std::int64_t term = g.multiplicity;
    for (int p = 0; p < power; ++p) term = checked_mul(term, g.value);
    total = checked_add(total, term);
  }
  return total;
}

std::vector<std::int64_t> IntSpectrum::expanded() const {
  std::vector<std::int64_t> out;
  for (const auto& g : groups) out.insert(out.end(), static_cast<std::size_t>(g.multiplicity), g.value);
  return out;
}

Spectrum IntSpectrum::to_spectrum() const {
  std::vector<double> values;
  for (std::int64_t v : expanded()) values.push_back(static_cast<double>(v));
  return Spectrum::from_values(std::move(values), 0.5);
}

std::string IntSpectrum::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i > 0) os << ", ";
    os << groups[i].value << '^' << groups[i].multiplicity;
  }
  os << '}';
  return os.str();
}

IntSpectrum johnson_laplacian_spectrum(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) throw InvalidArgument("Johnson(n,k) requires 1 <= k <= n-1");
  std::vector<IntEigenvalue> groups;
  for (int j = 0; j <= std::min(k, n - k); ++j) {
    groups.push_back({static_cast<std::int64_t>(j) * (n + 1 - j), scheme_multiplicity(n, j)});
  }
  return normalized(std::move(groups));
}

IntSpectrum odd_adjacency_spectrum(int k) {
  if (k < 2) throw InvalidArgument("Odd(k) requires k >= 2");
  std::vector<IntEigenvalue> groups;
  for (int j = 0; j < k; ++j) {
    groups.push_back({(j % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(k - j),
                      scheme_multiplicity(2 * k - 1, j)});
  }
  return normalized(std::move(groups));
}

IntSpectrum double_odd_laplacian_spectrum(int k) {
  if (k < 1) throw InvalidArgument("double odd graph requires k >= 1");
  std::vector<IntEigenvalue> groups;
  for (int j = 0; j < k; ++j) {
    const std::int64_t m = scheme_multiplicity(2 * k - 1, j);
    groups.push_back({j, m});
    groups.push_back({2 * k - j, m});
  }
  return normalized(std::move(groups));
}

IntSpectrum star_token_laplacian_spectrum(int k) { return double_odd_laplacian_spectrum(k); }

Spectrum double_adjacency_spectrum(const Spectrum& base) {
  std::vector<double> values;
  for (const auto& g : base.groups()) {
    values.insert(values.end(), static_cast<std::size_t>(g.multiplicity), g.value);
    values.insert(values.end(), static_cast<std::size_t>(g.multiplicity), -g.value);
  }
  return Spectrum::from_values(std::move(values), base.group_tol());
}

std::vector<std::int64_t> doubled_johnson_laplacian_values(int n, int k) {
  const bool even = n % 2 == 0;
  const int k_max = even ? n / 2 - 1 : (n - 1) / 2;
  if (n < 2 || k < 0 || k > k_max) {
    throw InvalidArgument("listed doubled Johnson values need k <= " + std::to_string(k_max) +
                          " for n = " + std::to_string(n));
  }
  std::vector<std::int64_t> values;
  const int low_top = even ? k - 1 : k;
  for (int j = 0; j <= low_top; ++j) values.push_back(j);
  for (int j = 1; j <= k; ++j) values.push_back(n - k + j);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

DoubledJohnsonComparison compare_doubled_johnson(int n, int k, double tol) {
  DoubledJohnsonComparison out;
  out.listed = doubled_johnson_laplacian_values(n, k);
  out.numeric = spectrum_of(make_family({family::DoubledJohnson{n, k}}));
  for (const auto& g : out.numeric.groups()) {
    const bool listed = std::any_of(out.listed.begin(), out.listed.end(), [&](std::int64_t v) {
      return std::abs(static_cast<double>(v) - g.value) <= tol;
    });
    if (!listed) out.unlisted.push_back(g.value);
  }
  for (std::int64_t v : out.listed) {
    const auto& groups = out.numeric.groups();
    const bool found = std::any_of(groups.begin(), groups.end(), [&](const SpectrumGroup& g) {
      return std::abs(static_cast<double>(v) - g.value) <= tol;
    });
    if (!found) out.absent.push_back(v);
  }
  return out;
}

namespace {

ClosedFormResult from_int(const IntSpectrum& s) {
  ClosedFormResult r;
  for (const auto& g : s.groups) {
    r.values.push_back(static_cast<double>(g.value));
    r.multiplicities.push_back(g.multiplicity);
  }
  return r;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

ClosedFormResult closed_form_spectrum(const ClosedFormFamily& family) {
  return std::visit(
      Overloaded{
          [](const closed_form::JohnsonLaplacian& f) {
            return from_int(johnson_laplacian_spectrum(f.n, f.k));
          },
          [](const closed_form::OddAdjacency& f) { return from_int(odd_adjacency_spectrum(f.k)); },
          [](const closed_form::DoubleOf& f) {
            ClosedFormResult r;
            const Spectrum doubled = double_adjacency_spectrum(f.base);
            for (const auto& g : doubled.groups()) {
              r.values.push_back(g.value);
              r.multiplicities.push_back(g.multiplicity);
            }
            return r;
          },
          [](const closed_form::DoubleOddLaplacian& f) {
            return from_int(double_odd_laplacian_spectrum(f.k));
          },
          [](const closed_form::DoubledJohnsonLaplacianValues& f) {
            ClosedFormResult r;
            for (std::int64_t v : doubled_johnson_laplacian_values(f.n, f.k)) {
              r.values.push_back(static_cast<double>(v));
            }
            return r;
          },
          [](const closed_form::StarTokenLaplacian& f) {
            return from_int(star_token_laplacian_spectrum(f.k));
          },
      },
      family);
}

}  // namespace tokenlap
