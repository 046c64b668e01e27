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

#ifndef WHITNEY_TABLEAUX_HPP_
#define WHITNEY_TABLEAUX_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "whitney/superalgebra.hpp"

namespace whitney {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

Partition conjugate(const Partition& shape);
std::vector<Partition> partitions_of(int n);
bool is_partition(const Partition& shape);

// All weak compositions of total into exactly `parts` nonnegative parts.
std::vector<Composition> all_compositions(int total, int parts);

// Dominance order on partitions of equal size; false when |a| != |b|.
bool dominance_leq(const Partition& a, const Partition& b);

struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  int boxes() const;
};

bool operator==(const Tableau& a, const Tableau& b);

// Rows strictly increase left to right, columns weakly increase downward.
bool is_row_strict(const Tableau& t);
// Rows weakly increase, columns strictly increase.
bool is_column_strict(const Tableau& t);

// content(t)[i] = multiplicity of entry i+1.
Composition content(const Tableau& t);

// A pair (T | S) of equal shape: T fills with letters, S with places.
struct TabPair {
  Tableau letters;
  Tableau places;
};

// All fillings of shape with the given content, under the row-strict or
// column-strict discipline.
std::vector<Tableau> row_strict_fillings(const Partition& shape,
                                         const Composition& content);
std::vector<Tableau> column_strict_fillings(const Partition& shape,
                                            const Composition& content);
// Same, but entries range freely over 1..max_entry.
std::vector<Tableau> row_strict_fillings_free(const Partition& shape,
                                              int max_entry);
std::vector<Tableau> column_strict_fillings_free(const Partition& shape,
                                                 int max_entry);

// All (T | S) with T row strict of the letter content, S column strict of
// the place content, common shape running over partitions of the degree.
// row_ok, when set, filters T by its rows (e.g. matroid independence).
using RowPredicate = std::function<bool(const std::vector<int>&)>;
std::vector<TabPair> enumerate_standard_pairs(const Composition& letter_content,
                                              const Composition& place_content,
                                              const RowPredicate& row_ok = {});

// The element tab(T | S): product over rows of (row word of T | divided
// power normalization of the S row). Throws if shapes differ or a T row
// repeats a letter.
Element tab_element(const TabPair& pair);

// RSK row insertion of v into a column-strict-by-rows tableau (rows weakly
// increase). Returns the new tableau and the 1-based (row, col) of the
// added box.
std::pair<Tableau, std::pair<int, int>> rsk_row_insert(Tableau t, int v);

// Alias used by matroid code; identical to dominance_leq.
inline bool dominance_leq_shapes(const Partition& a, const Partition& b) {
  return dominance_leq(a, b);
}

}  // namespace whitney

#endif  // WHITNEY_TABLEAUX_HPP_
