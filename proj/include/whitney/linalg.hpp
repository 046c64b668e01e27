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

#ifndef WHITNEY_LINALG_HPP_
#define WHITNEY_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "whitney/numbers.hpp"

namespace whitney {

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Int>> a;  // rows x cols, row major

  static IntMatrix zero(std::size_t rows, std::size_t cols);
  Int& at(std::size_t r, std::size_t c) { return a[r][c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a[r][c]; }
};

struct RatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Rat>> a;

  static RatMatrix zero(std::size_t rows, std::size_t cols);
  Rat& at(std::size_t r, std::size_t c) { return a[r][c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a[r][c]; }
};

struct SmithNormalForm {
  // Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
  std::vector<Int> invariant_factors;
  std::size_t rank = 0;
};

// Row rank over Q by fraction-free-ish Gaussian elimination.
std::size_t rank_rational(RatMatrix m);

// Coefficients c with c * basis == target (basis rows span), if any.
std::optional<std::vector<Rat>> solve_in_span(const RatMatrix& basis,
                                              const std::vector<Rat>& target);

// Basis of { x : m * x == 0 }. Each basis vector has entry 1 at "its" free
// column and entry 0 at every other free column (the standard RREF basis);
// downstream code relies on that identity pattern.
std::vector<std::vector<Rat>> nullspace_rational(const RatMatrix& m);

struct NullspaceBasis {
  std::vector<std::vector<Rat>> rows;
  // rows[i] has entry 1 at free_columns[i] and 0 at every free_columns[j],
  // j != i; increasing.
  std::vector<std::size_t> free_columns;
};

// nullspace_rational plus the free-column bookkeeping.
NullspaceBasis nullspace_tracked(const RatMatrix& m);

SmithNormalForm smith_normal_form(IntMatrix m);

// Incremental row space accumulator over Q, kept in echelon form.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  // Returns true when the row enlarged the span.
  bool insert(std::vector<Rat> row);
  bool contains(std::vector<Rat> row) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::vector<Rat>>& echelon_rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

 private:
  // Reduces row in place; returns the pivot column, or cols_ if row became 0.
  std::size_t reduce(std::vector<Rat>& row) const;

  std::size_t cols_;
  std::vector<std::vector<Rat>> rows_;  // echelon rows, pivot coefficient 1
  std::vector<std::size_t> pivots_;     // pivot column of rows_[i], increasing
};

}  // namespace whitney

#endif  // WHITNEY_LINALG_HPP_
