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

#include "whitney/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace whitney {

namespace {

constexpr int kMaxGround = 31;

std::uint32_t to_mask(int n, const std::vector<int>& subset) {
  std::uint32_t mask = 0;
  for (int e : subset) {
    if (e < 1 || e > n) throw std::invalid_argument("element out of range");
    const std::uint32_t bit = 1u << (e - 1);
    if (mask & bit) throw std::invalid_argument("repeated element in subset");
    mask |= bit;
  }
  return mask;
}

std::vector<int> from_mask(std::uint32_t mask) {
  std::vector<int> out;
  for (int e = 1; mask != 0; ++e, mask >>= 1) {
    if (mask & 1u) out.push_back(e);
  }
  return out;
}

}  // namespace

Matroid::Matroid(int n, std::vector<std::vector<int>> circuits)
    : n_(n), circuits_(std::move(circuits)) {
  circuit_masks_.reserve(circuits_.size());
  for (const auto& c : circuits_) circuit_masks_.push_back(to_mask(n_, c));
}

Matroid Matroid::from_circuits(int n, std::vector<std::vector<int>> circuits) {
  if (n < 0 || n > kMaxGround) {
    throw std::invalid_argument("ground set size out of range");
  }
  std::vector<std::uint32_t> masks;
  masks.reserve(circuits.size());
  for (auto& c : circuits) {
    std::sort(c.begin(), c.end());
    masks.push_back(to_mask(n, c));  // also rejects repeats / range errors
    if (c.empty()) throw std::invalid_argument("empty circuit");
  }
  std::sort(circuits.begin(), circuits.end());
  if (std::adjacent_find(circuits.begin(), circuits.end()) != circuits.end()) {
    throw std::invalid_argument("duplicate circuit");
  }
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  // Incomparability.
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if ((masks[i] & masks[j]) == masks[i] && masks[i] != masks[j]) {
        throw std::invalid_argument("circuit contains another circuit");
      }
    }
  }
  // Elimination: for C1 != C2 and e in their intersection, (C1 u C2) - e
  // must contain a circuit.
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      std::uint32_t common = masks[i] & masks[j];
      if (common == 0) continue;
      const std::uint32_t unioned = masks[i] | masks[j];
      for (std::uint32_t e = common; e != 0; e &= e - 1) {
        const std::uint32_t probe = unioned & ~(e & ~(e - 1));
        const bool covered =
            std::any_of(masks.begin(), masks.end(), [&](std::uint32_t c) {
              return (c & probe) == c;
            });
        if (!covered) {
          throw std::invalid_argument("circuit elimination axiom fails");
        }
      }
    }
  }
  return Matroid(n, std::move(circuits));
}

Matroid Matroid::from_matrix(const RatMatrix& columns) {
  const int n = static_cast<int>(columns.cols);
  if (n > kMaxGround) throw std::invalid_argument("too many columns");
  auto independent = [&](std::uint32_t mask) {
    std::vector<int> members = from_mask(mask);
    RatMatrix sub = RatMatrix::zero(members.size(), columns.rows);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t r = 0; r < columns.rows; ++r) {
        sub.a[i][r] = columns.a[r][members[i] - 1];
      }
    }
    return rank_rational(std::move(sub)) == members.size();
  };
  // Circuits of a rank-r matroid have at most r + 1 elements.
  int rank = 0;
  {
    RatMatrix t = RatMatrix::zero(columns.cols, columns.rows);
    for (std::size_t r = 0; r < columns.rows; ++r) {
      for (std::size_t c = 0; c < columns.cols; ++c) t.a[c][r] = columns.a[r][c];
    }
    rank = static_cast<int>(rank_rational(std::move(t)));
  }
  return Matroid(n, circuits_from_independence(n, independent, rank + 1));
}

std::vector<std::vector<int>> circuits_from_independence(
    int n, const std::function<bool(std::uint32_t)>& independent,
    int max_circuit_size) {
  if (n < 0 || n > kMaxGround) {
    throw std::invalid_argument("ground set size out of range");
  }
  std::vector<std::uint32_t> circuit_masks;
  std::vector<std::vector<int>> circuits;
  for (int size = 1; size <= std::min(n, max_circuit_size); ++size) {
    // All size-subsets as masks, increasing.
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::uint32_t mask = 0;
      for (int i : idx) mask |= 1u << i;
      const bool contains_smaller =
          std::any_of(circuit_masks.begin(), circuit_masks.end(),
                      [&](std::uint32_t c) { return (c & mask) == c; });
      if (!contains_smaller && !independent(mask)) {
        circuit_masks.push_back(mask);
        circuits.push_back(from_mask(mask));
      }
      int p = size - 1;
      while (p >= 0 && idx[p] == n - size + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  std::sort(circuits.begin(), circuits.end());
  return circuits;
}

bool Matroid::is_independent_mask(std::uint32_t mask) const {
  return std::none_of(circuit_masks_.begin(), circuit_masks_.end(),
                      [&](std::uint32_t c) { return (c & mask) == c; });
}

bool Matroid::is_independent(const std::vector<int>& subset) const {
  return is_independent_mask(to_mask(n_, subset));
}

int Matroid::rank_of_mask(std::uint32_t mask) const {
  // Greedy: circuits are available, so independence checks are exact and
  // greedy extension reaches the rank of the restriction.
  std::uint32_t current = 0;
  int rank = 0;
  for (int e = 0; e < n_; ++e) {
    const std::uint32_t bit = 1u << e;
    if (!(mask & bit)) continue;
    if (is_independent_mask(current | bit)) {
      current |= bit;
      ++rank;
    }
  }
  return rank;
}

int Matroid::rank_of(const std::vector<int>& subset) const {
  return rank_of_mask(to_mask(n_, subset));
}

int Matroid::rank() const {
  return rank_of_mask(n_ == 0 ? 0u : (1u << n_) - 1u);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.n() + b.n() > kMaxGround) {
    throw std::invalid_argument("direct sum exceeds ground set cap");
  }
  std::vector<std::vector<int>> circuits = a.circuits();
  for (std::vector<int> c : b.circuits()) {
    for (int& e : c) e += a.n();
    circuits.push_back(std::move(c));
  }
  return Matroid::from_circuits(a.n() + b.n(), std::move(circuits));
}

Matroid truncation(const Matroid& m) {
  const int r = m.rank();
  if (r == 0) throw std::invalid_argument("truncation of a rank-0 matroid");
  auto independent = [&](std::uint32_t mask) {
    return std::popcount(mask) <= r - 1 && m.is_independent_mask(mask);
  };
  return Matroid::from_circuits(
      m.n(), circuits_from_independence(m.n(), independent, r));
}

Matroid principal_extension(const Matroid& m) {
  const Matroid free_point = Matroid::from_circuits(1, {});
  return truncation(direct_sum(m, free_point));
}

Matroid freedom(const std::vector<int>& bits) {
  if (bits.empty()) {
    throw std::invalid_argument("freedom needs a nonempty bit sequence");
  }
  for (int bit : bits) {
    if (bit != 0 && bit != 1) {
      throw std::invalid_argument("freedom bits must be 0 or 1");
    }
  }
  // First bit seeds with a coloop (1) or a loop (0); afterwards 1 adds a
  // coloop and 0 adds a generic point.
  Matroid current = bits[0] == 1 ? Matroid::from_circuits(1, {})
                                 : Matroid::from_circuits(1, {{1}});
  for (std::size_t i = 1; i < bits.size(); ++i) {
    current = bits[i] == 1
                  ? direct_sum(current, Matroid::from_circuits(1, {}))
                  : principal_extension(current);
  }
  return current;
}

Matroid parallel_extension(const Matroid& m, const Composition& mu) {
  if (static_cast<int>(mu.size()) != m.n()) {
    throw std::invalid_argument("multiplicity vector length mismatch");
  }
  int total = 0;
  std::vector<std::vector<int>> copies(m.n());
  for (int i = 0; i < m.n(); ++i) {
    if (mu[i] < 0) throw std::invalid_argument("negative multiplicity");
    // mu[i] == 0 deletes element i+1: it gets no copies, and circuits
    // through it produce no transversal lifts.
    for (int k = 0; k < mu[i]; ++k) copies[i].push_back(total + k + 1);
    total += mu[i];
  }
  if (total > kMaxGround) {
    throw std::invalid_argument("parallel extension exceeds ground set cap");
  }

  std::vector<std::vector<int>> circuits;
  // Two copies of the same element form a circuit.
  for (int i = 0; i < m.n(); ++i) {
    for (std::size_t a = 0; a < copies[i].size(); ++a) {
      for (std::size_t b = a + 1; b < copies[i].size(); ++b) {
        circuits.push_back({copies[i][a], copies[i][b]});
      }
    }
  }
  // Transversal lifts of the original circuits.
  for (const auto& c : m.circuits()) {
    std::vector<int> pick(c.size(), 0);
    auto rec = [&](auto&& self, std::size_t at) -> void {
      if (at == c.size()) {
        std::vector<int> lifted;
        for (std::size_t i = 0; i < c.size(); ++i) {
          lifted.push_back(copies[c[i] - 1][pick[i]]);
        }
        std::sort(lifted.begin(), lifted.end());
        circuits.push_back(std::move(lifted));
        return;
      }
      for (std::size_t k = 0; k < copies[c[at] - 1].size(); ++k) {
        pick[at] = static_cast<int>(k);
        self(self, at + 1);
      }
    };
    rec(rec, 0);
  }
  // A loop with extra copies makes some lifts non-minimal; prune.
  std::vector<std::uint32_t> masks;
  for (const auto& c : circuits) masks.push_back(to_mask(total, c));
  std::vector<std::vector<int>> minimal;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < circuits.size() && keep; ++j) {
      if (j == i) continue;
      if ((masks[j] & masks[i]) == masks[j] &&
          (masks[j] != masks[i] || j < i)) {
        keep = false;
      }
    }
    if (keep) minimal.push_back(circuits[i]);
  }
  return Matroid::from_circuits(total, std::move(minimal));
}

Partition rank_partition(const Matroid& m) {
  const int n = m.n();
  if (n > 20) throw std::invalid_argument("rank_partition is desk scale");
  // Rank of every subset, indexed by mask; 2^n entries at desk scale.
  const std::size_t count = std::size_t(1) << n;
  std::vector<int> ranks(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    ranks[mask] = m.rank_of_mask(static_cast<std::uint32_t>(mask));
  }
  const std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1u);
  // Matroid union rank formula: the largest union of k independent sets has
  // size min over subsets A of |E - A| + k * rank(A).
  std::vector<int> prefix(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    int best = n;  // A empty
    for (std::size_t a = 0; a < count; ++a) {
      best = std::min(
          best, std::popcount(full & ~static_cast<std::uint32_t>(a)) +
                    k * ranks[a]);
    }
    prefix[k] = best;
  }
  Partition rho;
  for (int k = 1; k <= n; ++k) {
    const int part = prefix[k] - prefix[k - 1];
    if (part == 0) break;
    rho.push_back(part);
  }
  return rho;
}

bool independent_set_partition_exists(const Matroid& m,
                                      const Partition& lambda) {
  if (!is_partition(lambda) && !lambda.empty()) {
    throw std::invalid_argument("lambda is not a partition");
  }
  const int total = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (total != m.n()) {
    throw std::invalid_argument("partition size must equal the ground set");
  }
  if (m.n() == 0) return true;

  const std::size_t blocks = lambda.size();
  std::vector<std::uint32_t> block_mask(blocks, 0);
  std::vector<int> block_fill(blocks, 0);
  // Assign elements in order; equal-size empty blocks are interchangeable,
  // so only the first empty block of each size is tried.
  auto rec = [&](auto&& self, int element) -> bool {
    if (element > m.n()) return true;
    const std::uint32_t bit = 1u << (element - 1);
    int last_tried_empty_size = -1;
    for (std::size_t b = 0; b < blocks; ++b) {
      if (block_fill[b] == lambda[b]) continue;
      if (block_fill[b] == 0) {
        if (lambda[b] == last_tried_empty_size) continue;
        last_tried_empty_size = lambda[b];
      }
      if (!m.is_independent_mask(block_mask[b] | bit)) continue;
      block_mask[b] |= bit;
      ++block_fill[b];
      if (self(self, element + 1)) return true;
      block_mask[b] &= ~bit;
      --block_fill[b];
    }
    return false;
  };
  return rec(rec, 1);
}

std::vector<std::vector<int>> broken_circuits(const Matroid& m) {
  std::vector<std::vector<int>> out;
  for (const auto& c : m.circuits()) {
    std::vector<int> broken(c.begin() + 1, c.end());  // c is sorted
    out.push_back(std::move(broken));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> nbc_sets(const Matroid& m, int k,
                                       bool must_contain_1) {
  if (k < 0 || k > m.n()) return {};
  std::vector<std::uint32_t> broken_masks;
  for (const auto& b : broken_circuits(m)) {
    broken_masks.push_back(to_mask(m.n(), b));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> members;
  auto rec = [&](auto&& self, int next, std::uint32_t mask) -> void {
    if (static_cast<int>(members.size()) == k) {
      if (must_contain_1 && !(mask & 1u)) return;
      for (std::uint32_t b : broken_masks) {
        if ((b & mask) == b) return;
      }
      out.push_back(members);
      return;
    }
    const int left = k - static_cast<int>(members.size());
    for (int e = next; e + left - 1 <= m.n(); ++e) {
      members.push_back(e);
      self(self, e + 1, mask | (1u << (e - 1)));
      members.pop_back();
    }
  };
  rec(rec, 1, 0);
  return out;
}

std::pair<int, std::vector<int>> external_activity(const Matroid& m,
                                                   const std::vector<int>& I) {
  const std::uint32_t base = to_mask(m.n(), I);
  if (!m.is_independent_mask(base)) {
    throw std::invalid_argument("external activity needs an independent set");
  }
  std::vector<int> active;
  for (int e = 1; e <= m.n(); ++e) {
    const std::uint32_t bit = 1u << (e - 1);
    if (base & bit) continue;
    const std::uint32_t probe = base | bit;
    if (m.is_independent_mask(probe)) continue;
    // The fundamental circuit of e over I is the unique circuit inside I + e.
    int min_element = 0;
    for (const auto& c : m.circuits()) {
      const std::uint32_t cmask = to_mask(m.n(), c);
      if ((cmask & probe) == cmask) {
        min_element = c.front();
        break;  // circuits are sorted, and the circuit here is unique
      }
    }
    if (min_element == e) active.push_back(e);
  }
  return {static_cast<int>(active.size()), active};
}

std::vector<int> closure(const Matroid& m, const std::vector<int>& subset) {
  const std::uint32_t base = to_mask(m.n(), subset);
  const int base_rank = m.rank_of_mask(base);
  std::vector<int> out;
  for (int e = 1; e <= m.n(); ++e) {
    const std::uint32_t bit = 1u << (e - 1);
    if ((base & bit) || m.rank_of_mask(base | bit) == base_rank) {
      out.push_back(e);
    }
  }
  return out;
}

RatMatrix generic_freedom_matrix(const std::vector<int>& bits,
                                 std::uint64_t seed) {
  if (bits.empty()) throw std::invalid_argument("empty bit sequence");
  std::size_t rank = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0 or 1");
    rank += static_cast<std::size_t>(b);
  }
  // A leading 0 bit realizes a loop: a zero column needs one row to live in.
  RatMatrix m = RatMatrix::zero(std::max<std::size_t>(rank, 1), bits.size());
  std::uint64_t state = seed;
  std::size_t opened = 0;
  for (std::size_t col = 0; col < bits.size(); ++col) {
    if (bits[col] == 1) {
      m.a[opened][col] = 1;
      ++opened;
    } else {
      for (std::size_t row = 0; row < opened; ++row) {
        m.a[row][col] = random_rational(state);
      }
    }
  }
  return m;
}

RatMatrix random_rational_matrix(std::size_t rows, std::size_t cols,
                                 std::uint64_t seed) {
  RatMatrix m = RatMatrix::zero(rows, cols);
  std::uint64_t state = seed;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.a[r][c] = random_rational(state);
    }
  }
  return m;
}

}  // namespace whitney
