#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the routines it is used to check.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "ratsurf/integer.hpp"

namespace oracle {

using ratsurf::Integer;

/// Number of degree-m monomials in `vars` variables, by direct recursion.
inline std::int64_t count_monomials(int vars, int m) {
  if (m < 0) return 0;
  if (vars == 1) return 1;
  std::int64_t total = 0;
  for (int first = 0; first <= m; ++first) total += count_monomials(vars - 1, m - first);
  return total;
}

/// Pascal-triangle binomial, C(n, k) for 0 <= n.
inline Integer pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1];
  }
  return row[static_cast<std::size_t>(k)];
}

inline Integer factorial(int n) {
  Integer acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

/// h^0(O(d)) on P^2 by counting (i, j, k) with i + j + k = d.
inline std::int64_t plane_sections(std::int64_t d) {
  std::int64_t count = 0;
  for (std::int64_t i = 0; i <= d; ++i) {
    for (std::int64_t j = 0; i + j <= d; ++j) ++count;
  }
  return count;
}

/// h^0(aG + bF) on F_e: lattice points (k, j), 0 <= k <= a, 0 <= j <= b - k e.
inline std::int64_t ruled_sections(std::int64_t e, std::int64_t a, std::int64_t b) {
  std::int64_t count = 0;
  for (std::int64_t k = 0; k <= a; ++k) {
    for (std::int64_t j = 0; j <= b - k * e; ++j) ++count;
  }
  return count;
}

/// Plane curve genus (d-1)(d-2)/2.
inline std::int64_t plane_genus(std::int64_t d) { return (d - 1) * (d - 2) / 2; }

/// Number of multisets drawn from `parts` (distinct nonzero vectors with
/// nonnegative entries) summing to `target`, by a coin-change recursion.
inline std::int64_t count_vector_partitions(const std::vector<std::vector<std::int64_t>>& parts,
                                            const std::vector<std::int64_t>& target) {
  std::map<std::pair<std::size_t, std::vector<std::int64_t>>, std::int64_t> memo;
  std::function<std::int64_t(std::size_t, const std::vector<std::int64_t>&)> go =
      [&](std::size_t i, const std::vector<std::int64_t>& rest) -> std::int64_t {
    bool zero = true;
    for (auto v : rest) {
      if (v < 0) return 0;
      zero = zero && v == 0;
    }
    if (zero) return 1;
    if (i == parts.size()) return 0;
    auto key = std::make_pair(i, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // Use part i zero or more times, then move on.
    std::int64_t total = go(i + 1, rest);
    std::vector<std::int64_t> next = rest;
    for (;;) {
      bool ok = true;
      for (std::size_t c = 0; c < next.size(); ++c) {
        next[c] -= parts[i][c];
        ok = ok && next[c] >= 0;
      }
      if (!ok) break;
      total += go(i + 1, next);
    }
    memo[key] = total;
    return total;
  };
  return go(0, target);
}

/// Seeded generator for the property suites.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261018);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace oracle
