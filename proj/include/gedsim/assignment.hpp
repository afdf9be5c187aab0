#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "gedsim/costs.hpp"
#include "gedsim/error.hpp"
#include "gedsim/matrix.hpp"

namespace gedsim {

inline constexpr std::int32_t kDeleted = -1;

template <class T>
struct AssignmentResult {
  std::vector<std::int32_t> row_to_col;
  T total_cost{};
};

namespace detail {

// Rewrites an optimal assignment into the lexicographically smallest optimal
// one. Any optimal dual certifies every optimal assignment, so it is enough to
// search perfect matchings of the tight (zero reduced cost) subgraph.
template <std::integral T>
void lexicographic_optimum(const Matrix<T>& c, const std::vector<T>& u, const std::vector<T>& v,
                           std::vector<std::int32_t>& row_to_col) {
  const std::size_t n = c.rows();
  auto tight = [&](std::size_t r, std::size_t col) { return c(r, col) - u[r] - v[col] == 0; };
  std::vector<std::int32_t> owner(n);
  for (std::size_t r = 0; r < n; ++r) owner[static_cast<std::size_t>(row_to_col[r])] = static_cast<std::int32_t>(r);

  std::vector<char> seen(n);
  std::vector<std::pair<std::size_t, std::size_t>> path;  // (row, new column)
  for (std::size_t r = 0; r < n; ++r) {
    const auto freed = static_cast<std::size_t>(row_to_col[r]);
    for (std::size_t cand = 0; cand < freed; ++cand) {
      if (!tight(r, cand) || static_cast<std::size_t>(owner[cand]) < r) continue;
      std::fill(seen.begin(), seen.end(), 0);
      seen[cand] = 1;
      path.clear();
      // Row `row` lost its column; find it a tight replacement, ending on `freed`.
      std::function<bool(std::size_t)> reroute = [&](std::size_t row) -> bool {
        for (std::size_t col = 0; col < n; ++col) {
          if (seen[col] || !tight(row, col)) continue;
          if (col == freed) {
            path.emplace_back(row, col);
            return true;
          }
          const auto next = static_cast<std::size_t>(owner[col]);
          if (next <= r) continue;
          seen[col] = 1;
          path.emplace_back(row, col);
          if (reroute(next)) return true;
          path.pop_back();
        }
        return false;
      };
      if (!reroute(static_cast<std::size_t>(owner[cand]))) continue;
      row_to_col[r] = static_cast<std::int32_t>(cand);
      owner[cand] = static_cast<std::int32_t>(r);
      for (auto [row, col] : path) {
        row_to_col[row] = static_cast<std::int32_t>(col);
        owner[col] = static_cast<std::int32_t>(row);
      }
      break;
    }
  }
}

}  // namespace detail

/// Minimum-cost perfect matching on a square matrix (Kuhn-Munkres with
/// potentials, O(n^3)). Among optimal matchings the lexicographically smallest
/// row_to_col is returned.
template <std::integral T>
AssignmentResult<T> lsap_solve(const Matrix<T>& c) {
  if (c.rows() != c.cols()) {
    throw Error(ErrorCode::NonSquare, std::to_string(c.rows()) + "x" + std::to_string(c.cols()));
  }
  const std::size_t n = c.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c(i, j) < 0) throw Error(ErrorCode::NegativeEntry, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  AssignmentResult<T> result;
  if (n == 0) return result;

  constexpr T inf = std::numeric_limits<T>::max() / 4;
  // 1-based arrays; column 0 is the virtual start column.
  std::vector<T> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      T delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const T cur = c(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  result.row_to_col.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) result.row_to_col[p[j] - 1] = static_cast<std::int32_t>(j - 1);

  std::vector<T> ur(u.begin() + 1, u.end()), vr(v.begin() + 1, v.end());
  detail::lexicographic_optimum(c, ur, vr, result.row_to_col);
  for (std::size_t i = 0; i < n; ++i) result.total_cost += c(i, static_cast<std::size_t>(result.row_to_col[i]));
  return result;
}

struct PaddedMatrix {
  Matrix<Cost> matrix;
  /// Sentinel for forbidden cells; exceeds every feasible assignment total.
  Cost infinity = 0;
};

/// Square (n+m)x(n+m) matrix letting every row be deleted and every column
/// inserted: [C | diag(del)] over [diag(ins) | 0].
inline PaddedMatrix pad_for_insert_delete(const Matrix<Cost>& map, const std::vector<Cost>& del,
                                          const std::vector<Cost>& ins) {
  const std::size_t n = del.size();
  const std::size_t m = ins.size();
  const bool shape_ok = map.rows() == n && (map.cols() == m || (map.empty() && (n == 0 || m == 0)));
  if (!shape_ok) {
    throw Error(ErrorCode::DimensionMismatch, "mapping matrix " + std::to_string(map.rows()) + "x" +
                                                  std::to_string(map.cols()) + " vs del " + std::to_string(n) +
                                                  ", ins " + std::to_string(m));
  }
  Cost total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) total += map(i, k);
  }
  for (Cost x : del) total += x;
  for (Cost x : ins) total += x;

  PaddedMatrix out{Matrix<Cost>(n + m, n + m, 0), total + 1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) out.matrix(i, k) = map(i, k);
    for (std::size_t k = 0; k < n; ++k) out.matrix(i, m + k) = i == k ? del[i] : out.infinity;
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) out.matrix(n + i, k) = i == k ? ins[k] : out.infinity;
  }
  return out;
}

/// Reads an assignment on a padded matrix back as a partial mapping of the n
/// original rows onto the m original columns (kDeleted for deletions).
inline std::vector<std::int32_t> unpad_mapping(const std::vector<std::int32_t>& row_to_col, std::size_t n,
                                               std::size_t m) {
  std::vector<std::int32_t> out(n, kDeleted);
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<std::size_t>(row_to_col[i]) < m) out[i] = row_to_col[i];
  }
  return out;
}

/// Υ(S1,S2) = max(|S1|,|S2|) - |S1 ∩ S2| on multisets.
template <class T>
std::size_t multiset_edit_distance(std::vector<T> a, std::vector<T> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t common = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return std::max(a.size(), b.size()) - common;
}

}  // namespace gedsim
