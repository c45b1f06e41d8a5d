#ifndef TORIC_TESTS_SUPPORT_HPP
#define TORIC_TESTS_SUPPORT_HPP

// Small helpers and brute-force oracles shared by the test suites. The
// oracles deliberately avoid the library's algorithms.

#include <toric/toric.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace toric::testing {

inline RationalVector rv(std::initializer_list<long long> xs) {
  RationalVector out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

inline LatticeVector v(std::size_t i) { return threefold_rays().at(i - 1); }  // 1-based v_i

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long bound) {
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = uniform_int(rng, -bound, bound);
  return a;
}

/// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = a(i, c);
    Integer term = a(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

/// All k-subsets of {0..n-1}.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(k, n)), true);
  if (k > n) return out;
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// Facets of the cone over the given 3-d generators by brute force: a normal
/// of every pair of generators is a facet normal when all generators lie on
/// one side and the plane holds at least two of them.
inline std::vector<LatticeVector> brute_force_facets3(const std::vector<LatticeVector>& gens) {
  std::vector<LatticeVector> out;
  for (const auto& pair : subsets(gens.size(), 2)) {
    const auto& a = gens[pair[0]];
    const auto& b = gens[pair[1]];
    LatticeVector n{0, 0, 0};
    n[0] = a[1] * b[2] - a[2] * b[1];
    n[1] = a[2] * b[0] - a[0] * b[2];
    n[2] = a[0] * b[1] - a[1] * b[0];
    if (n.is_zero()) continue;
    n = make_primitive(n);
    for (const auto& cand : {n, -n}) {
      bool ok = std::all_of(gens.begin(), gens.end(), [&](const LatticeVector& g) { return dot(cand, g) >= 0; });
      bool strict = std::any_of(gens.begin(), gens.end(), [&](const LatticeVector& g) { return dot(cand, g) > 0; });
      if (ok && strict && std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<LatticeVector> sorted(std::vector<LatticeVector> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace toric::testing

#endif  // TORIC_TESTS_SUPPORT_HPP
