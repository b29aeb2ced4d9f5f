#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "erap/manifold.hpp"
#include "erap/pointset.hpp"

namespace erap {

// ---------------------------------------------------------------------------
// Cost matrix
// ---------------------------------------------------------------------------

class CostMatrix {
 public:
  CostMatrix(std::size_t n, std::vector<double> entries)
      : n_(n), data_(std::move(entries)) {
    if (n_ == 0 || data_.size() != n_ * n_)
      throw std::invalid_argument("CostMatrix: entries must form a nonempty square");
    for (double v : data_)
      if (!(std::isfinite(v) && v >= 0.0))
        throw std::invalid_argument("CostMatrix: entries must be finite and >= 0");
  }

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const double* data() const { return data_.data(); }

  double max_entry() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, v);
    return m;
  }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

inline CostMatrix build_cost_matrix(const Manifold& M, const PointSet& X, const PointSet& Y) {
  if (X.size() != Y.size())
    throw std::invalid_argument("build_cost_matrix: point sets must have equal size");
  if (X.manifold != M.spec() || Y.manifold != M.spec())
    throw std::invalid_argument("build_cost_matrix: point sets live on a different manifold");
  for (const auto& p : X.points)
    if (!M.contains(p)) throw std::invalid_argument("build_cost_matrix: red point outside domain");
  for (const auto& p : Y.points)
    if (!M.contains(p)) throw std::invalid_argument("build_cost_matrix: blue point outside domain");
  const std::size_t n = X.size();
  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const SurfacePoint& x = X.points[i];
    double* row = entries.data() + i * n;
    for (std::size_t j = 0; j < n; ++j)
      row[j] = M.squared_distance_unchecked(x, Y.points[j]);
  }
  return CostMatrix(n, std::move(entries));
}

// ---------------------------------------------------------------------------
// Solutions
// ---------------------------------------------------------------------------

struct AssignmentSolution {
  std::vector<int> permutation;   // row -> column
  std::vector<double> row_duals;  // u
  std::vector<double> col_duals;  // v
  double total_cost = 0.0;
  bool has_duals = false;
};

namespace detail {
inline double neumaier_sum(const std::vector<double>& xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    comp += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Jonker-Volgenant shortest augmenting path solver (dense, double costs)
// ---------------------------------------------------------------------------

// Column reduction, reduction transfer, two augmenting-row-reduction sweeps,
// then Dijkstra-style shortest augmenting paths for the remaining rows.
// Deterministic: all scans break ties on the lowest index.
inline AssignmentSolution solve_jv(const CostMatrix& C) {
  const int n = static_cast<int>(C.size());
  const double* cost = C.data();
  const auto c = [&](int i, int j) -> double {
    return cost[static_cast<std::size_t>(i) * n + j];
  };
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::vector<double> u(n, 0.0), v(n, 0.0);
  std::vector<int> rowsol(n, -1), colsol(n, -1);
  std::vector<int> matches(n, 0), free_rows(n, 0);

  // column reduction, scanning columns in decreasing order
  for (int j = n - 1; j >= 0; --j) {
    double minv = c(0, j);
    int imin = 0;
    for (int i = 1; i < n; ++i)
      if (c(i, j) < minv) {
        minv = c(i, j);
        imin = i;
      }
    v[j] = minv;
    if (++matches[imin] == 1) {
      rowsol[imin] = j;
      colsol[j] = imin;
    } else {
      colsol[j] = -1;
    }
  }

  // reduction transfer from single-assigned rows
  int numfree = 0;
  for (int i = 0; i < n; ++i) {
    if (matches[i] == 0) {
      free_rows[numfree++] = i;
    } else if (matches[i] == 1) {
      const int j1 = rowsol[i];
      double m = kInf;
      for (int j = 0; j < n; ++j)
        if (j != j1) m = std::min(m, c(i, j) - v[j]);
      v[j1] -= m;
    }
  }

  // two passes of augmenting row reduction
  for (int pass = 0; pass < 2 && numfree > 0; ++pass) {
    int k = 0;
    const int prevnumfree = numfree;
    numfree = 0;
    while (k < prevnumfree) {
      const int i = free_rows[k++];
      double umin = c(i, 0) - v[0], usubmin = kInf;
      int j1 = 0, j2 = -1;
      for (int j = 1; j < n; ++j) {
        const double h = c(i, j) - v[j];
        if (h < usubmin) {
          if (h >= umin) {
            usubmin = h;
            j2 = j;
          } else {
            usubmin = umin;
            j2 = j1;
            umin = h;
            j1 = j;
          }
        }
      }
      int i0 = colsol[j1];
      if (umin < usubmin) {
        v[j1] -= usubmin - umin;
      } else if (i0 >= 0) {
        j1 = j2;
        i0 = colsol[j1];
      }
      rowsol[i] = j1;
      colsol[j1] = i;
      if (i0 >= 0) {
        if (umin < usubmin)
          free_rows[--k] = i0;  // reprocess immediately
        else
          free_rows[numfree++] = i0;
      }
    }
  }

  // shortest augmenting paths for the remaining free rows
  std::vector<double> d(n);
  std::vector<int> pred(n), collist(n);
  for (int f = 0; f < numfree; ++f) {
    const int freerow = free_rows[f];
    for (int j = 0; j < n; ++j) {
      d[j] = c(freerow, j) - v[j];
      pred[j] = freerow;
      collist[j] = j;
    }
    int low = 0, up = 0, last = -1, endofpath = -1;
    double mind = 0.0;
    bool unassignedfound = false;
    do {
      if (up == low) {
        // start a new block of minimal-d columns
        last = low - 1;
        mind = d[collist[up++]];
        for (int k = up; k < n; ++k) {
          const int j = collist[k];
          const double h = d[j];
          if (h <= mind) {
            if (h < mind) {
              up = low;
              mind = h;
            }
            collist[k] = collist[up];
            collist[up++] = j;
          }
        }
        for (int k = low; k < up; ++k)
          if (colsol[collist[k]] < 0) {
            endofpath = collist[k];
            unassignedfound = true;
            break;
          }
      }
      if (!unassignedfound) {
        const int j1 = collist[low++];
        const int i = colsol[j1];
        const double h = c(i, j1) - v[j1] - mind;
        for (int k = up; k < n; ++k) {
          const int j = collist[k];
          const double v2 = c(i, j) - v[j] - h;
          if (v2 < d[j]) {
            pred[j] = i;
            if (v2 == mind) {
              if (colsol[j] < 0) {
                endofpath = j;
                unassignedfound = true;
                break;
              }
              collist[k] = collist[up];
              collist[up++] = j;
            }
            d[j] = v2;
          }
        }
      }
    } while (!unassignedfound);

    for (int k = 0; k <= last; ++k) {
      const int j1 = collist[k];
      v[j1] += d[j1] - mind;
    }

    int i;
    int jpath = endofpath;
    do {
      i = pred[jpath];
      colsol[jpath] = i;
      const int jnext = rowsol[i];
      rowsol[i] = jpath;
      jpath = jnext;
    } while (i != freerow);
  }

  AssignmentSolution sol;
  sol.permutation = rowsol;
  sol.col_duals = v;
  sol.row_duals.resize(n);
  std::vector<double> terms(n);
  for (int i = 0; i < n; ++i) {
    sol.row_duals[i] = c(i, rowsol[i]) - v[rowsol[i]];
    terms[i] = c(i, rowsol[i]);
  }
  sol.total_cost = detail::neumaier_sum(terms);
  sol.has_duals = true;
  return sol;
}

// Exhaustive oracle over all n! permutations; duals are omitted.
inline AssignmentSolution solve_bruteforce(const CostMatrix& C) {
  const std::size_t n = C.size();
  if (n > 10) throw std::invalid_argument("solve_bruteforce: limited to n <= 10");
  std::vector<int> perm(n), best(n);
  std::iota(perm.begin(), perm.end(), 0);
  best = perm;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) cost += C(i, perm[i]);
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  AssignmentSolution sol;
  sol.permutation = best;
  sol.row_duals.assign(n, 0.0);
  sol.col_duals.assign(n, 0.0);
  sol.total_cost = best_cost;
  sol.has_duals = false;
  return sol;
}

// LP-duality certificate: dual feasibility, complementary slackness, and
// cost consistency within 1e-9 * max entry.
inline bool verify_optimality(const CostMatrix& C, const AssignmentSolution& sol) {
  const std::size_t n = C.size();
  if (!sol.has_duals || sol.permutation.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (int j : sol.permutation) {
    if (j < 0 || static_cast<std::size_t>(j) >= n || seen[j]) return false;
    seen[j] = 1;
  }
  const double tol = 1e-9 * C.max_entry();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sol.row_duals[i] + sol.col_duals[j] > C(i, j) + tol) return false;
  double perm_cost = 0.0, dual_cost = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(sol.permutation[i]);
    if (std::abs(sol.row_duals[i] + sol.col_duals[j] - C(i, j)) > tol) return false;
    perm_cost += C(i, j);
    dual_cost += sol.row_duals[i] + sol.col_duals[i];
  }
  const double scale_tol = tol * static_cast<double>(n);
  if (std::abs(perm_cost - sol.total_cost) > scale_tol) return false;
  if (std::abs(dual_cost - sol.total_cost) > scale_tol) return false;
  return true;
}

}  // namespace erap
