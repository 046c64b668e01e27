// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "whitney/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace whitney {

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) {
  IntMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(rows, std::vector<Int>(cols, Int(0)));
  return m;
}

RatMatrix RatMatrix::zero(std::size_t rows, std::size_t cols) {
  RatMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(rows, std::vector<Rat>(cols, Rat(0)));
  return m;
}

std::size_t rank_rational(RatMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(m.a[pivot], m.a[rank]);
    const Rat lead = m.a[rank][col];
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (m.a[r][col] == 0) continue;
      const Rat factor = m.a[r][col] / lead;
      for (std::size_t c = col; c < m.cols; ++c) {
        m.a[r][c] -= factor * m.a[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t RowEchelon::reduce(std::vector<Rat>& row) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (row[p] == 0) continue;
    const Rat factor = row[p];  // pivot coefficient in rows_[i] is 1
    for (std::size_t c = p; c < cols_; ++c) row[c] -= factor * rows_[i][c];
  }
  std::size_t pivot = 0;
  while (pivot < cols_ && row[pivot] == 0) ++pivot;
  return pivot;
}

bool RowEchelon::insert(std::vector<Rat> row) {
  if (row.size() != cols_) throw std::invalid_argument("row size mismatch");
  const std::size_t pivot = reduce(row);
  if (pivot == cols_) return false;
  const Rat lead = row[pivot];
  for (std::size_t c = pivot; c < cols_; ++c) row[c] /= lead;
  // Keep rows ordered by pivot so reduce() sweeps left to right.
  const auto pos =
      std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

bool RowEchelon::contains(std::vector<Rat> row) const {
  if (row.size() != cols_) throw std::invalid_argument("row size mismatch");
  return reduce(row) == cols_;
}

std::optional<std::vector<Rat>> solve_in_span(const RatMatrix& basis,
                                              const std::vector<Rat>& target) {
  if (target.size() != basis.cols) {
    throw std::invalid_argument("target length mismatch");
  }
  const std::size_t k = basis.rows;
  const std::size_t n = basis.cols;
  // Work rows carry an identity tail that tracks the combination of the
  // original rows each echelon row represents.
  std::vector<std::vector<Rat>> work(k, std::vector<Rat>(n + k, Rat(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) work[i][j] = basis.a[i][j];
    work[i][n + i] = 1;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pivot_rows;  // (col, row)
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < k; ++col) {
    std::size_t pivot = rank;
    while (pivot < k && work[pivot][col] == 0) ++pivot;
    if (pivot == k) continue;
    std::swap(work[pivot], work[rank]);
    const Rat lead = work[rank][col];
    for (std::size_t r = rank + 1; r < k; ++r) {
      if (work[r][col] == 0) continue;
      const Rat factor = work[r][col] / lead;
      for (std::size_t c = col; c < n + k; ++c) {
        work[r][c] -= factor * work[rank][c];
      }
    }
    pivot_rows.emplace_back(col, rank);
    ++rank;
  }

  std::vector<Rat> residue = target;
  std::vector<Rat> combo(k, Rat(0));
  for (const auto& [col, row] : pivot_rows) {
    if (residue[col] == 0) continue;
    const Rat factor = residue[col] / work[row][col];
    for (std::size_t c = col; c < n; ++c) residue[c] -= factor * work[row][c];
    for (std::size_t c = 0; c < k; ++c) combo[c] += factor * work[row][n + c];
  }
  for (const Rat& v : residue) {
    if (v != 0) return std::nullopt;
  }
  return combo;
}

NullspaceBasis nullspace_tracked(const RatMatrix& m) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<std::vector<Rat>> work = m.a;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && work[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(work[pivot], work[rank]);
    const Rat lead = work[rank][col];
    for (std::size_t c = col; c < cols; ++c) work[rank][c] /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || work[r][col] == 0) continue;
      const Rat factor = work[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        work[r][c] -= factor * work[rank][c];
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  NullspaceBasis basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      v[pivot_cols[i]] = -work[i][free];
    }
    basis.rows.push_back(std::move(v));
    basis.free_columns.push_back(free);
  }
  return basis;
}

std::vector<std::vector<Rat>> nullspace_rational(const RatMatrix& m) {
  return nullspace_tracked(m).rows;
}

namespace {

// Quotient minimizing |a - q * b|; the remainder satisfies |r| <= |b| / 2.
Int balanced_quotient(const Int& a, const Int& b) {
  Int q = a / b;  // truncated
  const Int r = a - q * b;
  if (2 * abs(r) > abs(b)) q += (r > 0) == (b > 0) ? 1 : -1;
  return q;
}

// Clears row t and column t outside the pivot at (t, t). Balanced remainders
// make the pivot at least halve whenever a remainder survives a step, so the
// restart count is logarithmic in the pivot. Column clearing runs first so
// that the subsequent row clearing (column operations against a column whose
// only nonzero is the pivot) touches nothing outside row t.
void clear_cross(IntMatrix& m, std::size_t t) {
restart:
  for (std::size_t r = t + 1; r < m.rows; ++r) {
    if (m.a[r][t] == 0) continue;
    const Int q = balanced_quotient(m.a[r][t], m.a[t][t]);
    if (q != 0) {
      for (std::size_t c = t; c < m.cols; ++c) m.a[r][c] -= q * m.a[t][c];
    }
    if (m.a[r][t] != 0) {
      std::swap(m.a[r], m.a[t]);
      goto restart;
    }
  }
  for (std::size_t c = t + 1; c < m.cols; ++c) {
    if (m.a[t][c] == 0) continue;
    const Int q = balanced_quotient(m.a[t][c], m.a[t][t]);
    if (q != 0) m.a[t][c] -= q * m.a[t][t];  // column t is e_t * pivot
    if (m.a[t][c] != 0) {
      for (std::size_t r = t; r < m.rows; ++r) {
        std::swap(m.a[r][c], m.a[r][t]);
      }
      goto restart;
    }
  }
}

}  // namespace

SmithNormalForm smith_normal_form(IntMatrix m) {
  SmithNormalForm result;
  const std::size_t bound = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < bound; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t best_r = m.rows, best_c = m.cols;
    for (std::size_t r = t; r < m.rows; ++r) {
      for (std::size_t c = t; c < m.cols; ++c) {
        if (m.a[r][c] == 0) continue;
        if (best_r == m.rows ||
            abs(m.a[r][c]) < abs(m.a[best_r][best_c])) {
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r == m.rows) break;
    std::swap(m.a[t], m.a[best_r]);
    if (best_c != t) {
      for (std::size_t r = 0; r < m.rows; ++r) {
        std::swap(m.a[r][best_c], m.a[r][t]);
      }
    }

    for (;;) {
      clear_cross(m, t);
      // Divisibility: the pivot must divide the whole trailing block. Adding
      // an offending row puts a non-multiple in the cleared row tail, so the
      // next clear_cross strictly shrinks the pivot; this terminates.
      bool fixed = true;
      for (std::size_t r = t + 1; r < m.rows && fixed; ++r) {
        for (std::size_t c = t + 1; c < m.cols && fixed; ++c) {
          if (m.a[r][c] % m.a[t][t] != 0) {
            for (std::size_t cc = t; cc < m.cols; ++cc) {
              m.a[t][cc] += m.a[r][cc];
            }
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
    result.invariant_factors.push_back(abs(m.a[t][t]));
  }
  result.rank = result.invariant_factors.size();
  return result;
}

}  // namespace whitney
