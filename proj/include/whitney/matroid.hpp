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

#ifndef WHITNEY_MATROID_HPP_
#define WHITNEY_MATROID_HPP_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "whitney/linalg.hpp"
#include "whitney/tableaux.hpp"

namespace whitney {

// Matroid on ground set {1, ..., n}, stored by its minimal circuits.
// Construction validates the circuit axioms (incomparability and the
// elimination exchange over all circuit pairs), so every instance is a
// genuine matroid. Ground sets are capped at 31 elements for the bitmask
// representation; the library targets desk scale (n <= 12).
class Matroid {
 public:
  static Matroid from_circuits(int n, std::vector<std::vector<int>> circuits);
  static Matroid from_matrix(const RatMatrix& columns);

  int n() const { return n_; }
  // Sorted list of sorted circuits.
  const std::vector<std::vector<int>>& circuits() const { return circuits_; }

  bool is_independent(const std::vector<int>& subset) const;
  bool is_independent_mask(std::uint32_t mask) const;
  int rank() const;
  int rank_of(const std::vector<int>& subset) const;
  int rank_of_mask(std::uint32_t mask) const;

 private:
  Matroid(int n, std::vector<std::vector<int>> circuits);

  int n_ = 0;
  std::vector<std::vector<int>> circuits_;
  std::vector<std::uint32_t> circuit_masks_;
};

// Minimal circuits of the independence system given by a predicate on masks.
// Helper shared by the constructions below and by test oracles.
std::vector<std::vector<int>> circuits_from_independence(
    int n, const std::function<bool(std::uint32_t)>& independent,
    int max_circuit_size);

Matroid direct_sum(const Matroid& a, const Matroid& b);

// Rank drops by one; rank-0 input is rejected.
Matroid truncation(const Matroid& m);

// Adds element n+1 freely: T(m (+) free point).
Matroid principal_extension(const Matroid& m);

// Freedom matroid of a bit sequence: the first bit seeds a coloop (1) or a
// loop (0); each later 1 adds a coloop, each later 0 a generic point.
Matroid freedom(const std::vector<int>& bits);

// Replaces element i by mu[i-1] >= 0 parallel copies (0 deletes); copies of
// i get the consecutive labels following the copies of 1..i-1.
Matroid parallel_extension(const Matroid& m, const Composition& mu);

// rho(m): partition whose k-th prefix sum is the rank of the k-fold matroid
// union of m with itself (largest union of k independent sets).
Partition rank_partition(const Matroid& m);

// Whether the ground set splits into independent blocks of sizes lambda.
// Requires sum(lambda) == n.
bool independent_set_partition_exists(const Matroid& m,
                                      const Partition& lambda);

std::vector<std::vector<int>> broken_circuits(const Matroid& m);

// k-subsets of the ground set containing no broken circuit; optionally only
// those containing element 1.
std::vector<std::vector<int>> nbc_sets(const Matroid& m, int k,
                                       bool must_contain_1);

// External activity of an independent set: elements e outside it that are
// the minimum of the unique circuit of I + e. Returns (count, elements).
std::pair<int, std::vector<int>> external_activity(const Matroid& m,
                                                   const std::vector<int>& I);

std::vector<int> closure(const Matroid& m, const std::vector<int>& subset);

// Staircase realization of freedom(bits): each 1 bit opens a fresh
// coordinate row (a coloop column), each 0 bit draws a column with random
// nonzero entries on the rows opened so far. Entries are deterministic in
// the seed; genericity is the caller's concern (compare column matroids).
RatMatrix generic_freedom_matrix(const std::vector<int>& bits,
                                 std::uint64_t seed);

// rows x cols matrix of seeded random rationals (numerators and
// denominators in [1, 10^6]).
RatMatrix random_rational_matrix(std::size_t rows, std::size_t cols,
                                 std::uint64_t seed);

}  // namespace whitney

#endif  // WHITNEY_MATROID_HPP_
