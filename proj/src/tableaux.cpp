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

#include "whitney/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace whitney {

Partition conjugate(const Partition& shape) {
  Partition out;
  if (shape.empty()) return out;
  out.resize(shape[0], 0);
  for (int part : shape) {
    for (int c = 0; c < part; ++c) ++out[c];
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative number");
  std::vector<Partition> out;
  Partition current;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, left - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Composition> all_compositions(int total, int parts) {
  if (total < 0 || parts < 0) throw std::invalid_argument("bad composition");
  std::vector<Composition> out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  Composition current(parts, 0);
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == parts - 1) {
      current[slot] = left;
      out.push_back(current);
      return;
    }
    for (int take = 0; take <= left; ++take) {
      current[slot] = take;
      self(self, slot + 1, left - take);
    }
  };
  rec(rec, 0, total);
  return out;
}

bool is_partition(const Partition& shape) {
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] <= 0) return false;
    if (i > 0 && shape[i] > shape[i - 1]) return false;
  }
  return true;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  const long total_a = std::accumulate(a.begin(), a.end(), 0L);
  const long total_b = std::accumulate(b.begin(), b.end(), 0L);
  if (total_a != total_b) return false;
  long prefix_a = 0, prefix_b = 0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    prefix_a += i < a.size() ? a[i] : 0;
    prefix_b += i < b.size() ? b[i] : 0;
    if (prefix_a > prefix_b) return false;
  }
  return true;
}

Partition Tableau::shape() const {
  Partition out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(static_cast<int>(row.size()));
  return out;
}

int Tableau::boxes() const {
  int total = 0;
  for (const auto& row : rows) total += static_cast<int>(row.size());
  return total;
}

bool operator==(const Tableau& a, const Tableau& b) {
  return a.rows == b.rows;
}

bool is_row_strict(const Tableau& t) {
  if (!is_partition(t.shape())) return false;
  for (const auto& row : t.rows) {
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (row[c - 1] >= row[c]) return false;
    }
  }
  for (std::size_t r = 1; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (t.rows[r - 1][c] > t.rows[r][c]) return false;
    }
  }
  return true;
}

bool is_column_strict(const Tableau& t) {
  if (!is_partition(t.shape())) return false;
  for (const auto& row : t.rows) {
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (row[c - 1] > row[c]) return false;
    }
  }
  for (std::size_t r = 1; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (t.rows[r - 1][c] >= t.rows[r][c]) return false;
    }
  }
  return true;
}

Composition content(const Tableau& t) {
  Composition out;
  for (const auto& row : t.rows) {
    for (int v : row) {
      if (v < 1) throw std::invalid_argument("tableau entries are positive");
      if (v > static_cast<int>(out.size())) out.resize(v, 0);
      ++out[v - 1];
    }
  }
  return out;
}

namespace {

// Fills boxes in row-major order. strict_rows selects the discipline:
// true means rows strict / columns weak, false the other way around.
void fill_rec(const Partition& shape, bool strict_rows,
              const Composition* target_content, int max_entry,
              Composition& used, std::vector<std::vector<int>>& rows,
              std::size_t r, std::size_t c, std::vector<Tableau>& out) {
  if (r == shape.size()) {
    out.push_back(Tableau{rows});
    return;
  }
  const std::size_t next_r = (c + 1 < static_cast<std::size_t>(shape[r]))
                                 ? r
                                 : r + 1;
  const std::size_t next_c = next_r == r ? c + 1 : 0;
  int lo = 1;
  if (c > 0) {
    const int left = rows[r][c - 1];
    lo = std::max(lo, strict_rows ? left + 1 : left);
  }
  if (r > 0) {
    const int above = rows[r - 1][c];
    lo = std::max(lo, strict_rows ? above : above + 1);
  }
  for (int v = lo; v <= max_entry; ++v) {
    if (target_content != nullptr) {
      if ((*target_content)[v - 1] - used[v - 1] <= 0) continue;
    }
    ++used[v - 1];
    rows[r][c] = v;
    fill_rec(shape, strict_rows, target_content, max_entry, used, rows, next_r,
             next_c, out);
    --used[v - 1];
  }
}

std::vector<Tableau> fillings(const Partition& shape, bool strict_rows,
                              const Composition* target_content,
                              int max_entry) {
  if (!is_partition(shape)) throw std::invalid_argument("bad shape");
  std::vector<Tableau> out;
  const int boxes =
      std::accumulate(shape.begin(), shape.end(), 0);
  if (target_content != nullptr) {
    const int total = std::accumulate(target_content->begin(),
                                      target_content->end(), 0);
    if (total != boxes) return out;
  }
  if (boxes == 0) {
    out.push_back(Tableau{});
    return out;
  }
  std::vector<std::vector<int>> rows;
  for (int part : shape) rows.emplace_back(part, 0);
  Composition used(max_entry, 0);
  fill_rec(shape, strict_rows, target_content, max_entry, used, rows, 0, 0,
           out);
  return out;
}

}  // namespace

std::vector<Tableau> row_strict_fillings(const Partition& shape,
                                         const Composition& content) {
  return fillings(shape, true, &content, static_cast<int>(content.size()));
}

std::vector<Tableau> column_strict_fillings(const Partition& shape,
                                            const Composition& content) {
  return fillings(shape, false, &content, static_cast<int>(content.size()));
}

std::vector<Tableau> row_strict_fillings_free(const Partition& shape,
                                              int max_entry) {
  return fillings(shape, true, nullptr, max_entry);
}

std::vector<Tableau> column_strict_fillings_free(const Partition& shape,
                                                 int max_entry) {
  return fillings(shape, false, nullptr, max_entry);
}

std::vector<TabPair> enumerate_standard_pairs(const Composition& letter_content,
                                              const Composition& place_content,
                                              const RowPredicate& row_ok) {
  const int degree =
      std::accumulate(letter_content.begin(), letter_content.end(), 0);
  const int place_degree =
      std::accumulate(place_content.begin(), place_content.end(), 0);
  std::vector<TabPair> out;
  if (degree != place_degree) return out;

  const int distinct_letters = static_cast<int>(
      std::count_if(letter_content.begin(), letter_content.end(),
                    [](int m) { return m > 0; }));
  const int distinct_places = static_cast<int>(
      std::count_if(place_content.begin(), place_content.end(),
                    [](int m) { return m > 0; }));

  for (const Partition& shape : partitions_of(degree)) {
    // A row-strict T needs distinct letters across each row; a column-strict
    // S needs distinct places down each column.
    if (!shape.empty() && shape[0] > distinct_letters) continue;
    if (static_cast<int>(shape.size()) > distinct_places) continue;
    std::vector<Tableau> letter_tabs = row_strict_fillings(shape, letter_content);
    if (row_ok) {
      std::erase_if(letter_tabs, [&](const Tableau& t) {
        return std::any_of(t.rows.begin(), t.rows.end(),
                           [&](const std::vector<int>& row) {
                             return !row_ok(row);
                           });
      });
    }
    if (letter_tabs.empty()) continue;
    const std::vector<Tableau> place_tabs =
        column_strict_fillings(shape, place_content);
    for (const Tableau& t : letter_tabs) {
      for (const Tableau& s : place_tabs) {
        out.push_back(TabPair{t, s});
      }
    }
  }
  return out;
}

Element tab_element(const TabPair& pair) {
  if (pair.letters.shape() != pair.places.shape()) {
    throw std::invalid_argument("tab pair shapes differ");
  }
  Element out = Element::one();
  for (std::size_t r = 0; r < pair.letters.rows.size(); ++r) {
    const Word& word = pair.letters.rows[r];
    // Equal consecutive places in an S row merge into divided powers.
    std::vector<std::pair<int, int>> factors;
    for (int place : pair.places.rows[r]) {
      if (!factors.empty() && factors.back().first == place) {
        ++factors.back().second;
      } else {
        factors.emplace_back(place, 1);
      }
    }
    const auto [coeff, mono] = dp_normalize(factors);
    Element row_elem = laplace_pair(word, mono);
    row_elem *= Rat(coeff);
    out = ext_mul(out, row_elem);
    if (out.is_zero()) return out;
  }
  return out;
}

std::pair<Tableau, std::pair<int, int>> rsk_row_insert(Tableau t, int v) {
  int value = v;
  for (std::size_t r = 0;; ++r) {
    if (r == t.rows.size()) {
      t.rows.push_back({value});
      return {t, {static_cast<int>(r) + 1, 1}};
    }
    auto& row = t.rows[r];
    // Bump the leftmost entry strictly greater than the incoming value.
    const auto it = std::upper_bound(row.begin(), row.end(), value);
    if (it == row.end()) {
      row.push_back(value);
      return {t, {static_cast<int>(r) + 1, static_cast<int>(row.size())}};
    }
    std::swap(*it, value);
  }
}

}  // namespace whitney
