#pragma once

// Slow reference computations used to cross-check the library.

#include <algorithm>
#include <vector>

#include "ellcox/exact_linalg.hpp"

namespace oracle {

using ellcox::Int;
using ellcox::IntVector;

using Dense = std::vector<std::vector<Int>>;

inline Int laplace_det(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Dense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Int term = m[0][j] * laplace_det(minor);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

/// gcd of all k x k minors of m.
inline Int minor_gcd(const Dense& m, std::size_t k) {
  Int g = 0;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (const auto& rs : k_subsets(rows, k))
    for (const auto& cs : k_subsets(cols, k)) {
      Dense sub;
      for (auto r : rs) {
        std::vector<Int> row;
        for (auto c : cs) row.push_back(m[r][c]);
        sub.push_back(row);
      }
      Int d = laplace_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

inline std::size_t dense_rank(const Dense& m) {
  if (m.empty()) return 0;
  std::size_t best = 0;
  std::size_t limit = std::min(m.size(), m[0].size());
  for (std::size_t k = 1; k <= limit; ++k)
    if (minor_gcd(m, k) != 0) best = k;
  return best;
}

/// True iff some nonzero nonnegative combination of `vs` vanishes (Gordan alternative), found as
/// a circuit with a strictly one-signed kernel vector. Carathéodory bounds the circuit size by d+1.
inline bool zero_in_hull(const std::vector<IntVector>& vs) {
  if (vs.empty()) return false;
  const std::size_t d = vs[0].size();
  for (std::size_t k = 1; k <= std::min(vs.size(), d + 1); ++k) {
    for (const auto& idx : k_subsets(vs.size(), k)) {
      Dense cols;  // d x k
      for (std::size_t r = 0; r < d; ++r) {
        std::vector<Int> row;
        for (auto i : idx) row.push_back(vs[i][r]);
        cols.push_back(row);
      }
      if (dense_rank(cols) != k - 1) continue;
      // choose k-1 independent rows, kernel by signed maximal minors
      Dense rows_sel;
      for (const auto& rs : k_subsets(d, k - 1)) {
        Dense sub;
        for (auto r : rs) sub.push_back(cols[r]);
        if (dense_rank(sub) == k - 1) {
          rows_sel = sub;
          break;
        }
      }
      std::vector<Int> kernel(k);
      for (std::size_t j = 0; j < k; ++j) {
        Dense minor;
        for (const auto& row : rows_sel) {
          std::vector<Int> r2;
          for (std::size_t c = 0; c < k; ++c)
            if (c != j) r2.push_back(row[c]);
          minor.push_back(r2);
        }
        Int det = laplace_det(minor);
        kernel[j] = (j % 2 == 0) ? det : Int(-det);
      }
      bool all_pos = std::all_of(kernel.begin(), kernel.end(), [](const Int& x) { return x > 0; });
      bool all_neg = std::all_of(kernel.begin(), kernel.end(), [](const Int& x) { return x < 0; });
      if (all_pos || all_neg) return true;
    }
  }
  return false;
}

}  // namespace oracle
