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

#ifndef WHITNEY_WHITNEY_HPP_
#define WHITNEY_WHITNEY_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "whitney/linalg.hpp"
#include "whitney/matroid.hpp"
#include "whitney/superalgebra.hpp"
#include "whitney/tableaux.hpp"

namespace whitney {

// A bidegree of the letter-place algebra: multiplicities per letter and per
// place. Letter index i has multiplicity letters[i-1]. Totals must agree for
// the graded piece to be nonzero; operations validate this.
struct Bidegree {
  Composition letters;
  Composition places;

  int letter_total() const;
  int place_total() const;
};

bool operator==(const Bidegree& a, const Bidegree& b);

struct GradedPieceReport {
  std::size_t monomial_count = 0;
  std::size_t relation_rank = 0;
  std::size_t free_rank = 0;  // monomial_count - relation_rank
  std::vector<Int> torsion_invariants;  // SNF invariant factors > 1
  std::size_t standard_pair_count = 0;  // independent-row standard pairs
};

// All exterior monomials in the pairs with the prescribed letter and place
// multiplicities, in canonical (sorted) order.
std::vector<LetterPlaceMonomial> monomial_basis(const Bidegree& d);

// Integer relation rows spanning the degree-d piece of the circuit ideal:
// coordinates over monomial_basis(d) of every (circuit word | p^(alpha))
// times a complementary monomial.
IntMatrix ideal_relations(const Matroid& m, const Bidegree& d);

GradedPieceReport graded_piece(const Matroid& m, const Bidegree& d);

// True when the independent-row standard pair elements span the degree-d
// piece of W(M) over Q (they always should; exercised as a property check).
bool standard_pairs_span(const Matroid& m, const Bidegree& d);

struct FreedomCheckReport {
  bool ok = true;
  std::size_t bidegrees_checked = 0;
  Bidegree first_failure;          // valid when !ok
  GradedPieceReport failure_data;  // valid when !ok
};

// For the freedom matroid of `bits`, checks every bidegree with letter total
// <= max_letter_total and places among 1..max_places: the graded piece must
// be free (no torsion) with free rank equal to the standard pair count.
FreedomCheckReport freedom_basis_check(const std::vector<int>& bits,
                                       int max_places, int max_letter_total);

struct StraighteningResult {
  bool basis_certified = false;  // the standard pairs were verified a basis
  bool in_span = false;
  std::vector<std::pair<TabPair, Rat>> coefficients;  // nonzero terms only
  bool dominance_ok = true;  // support shapes dominate the input shape
  bool content_ok = true;    // support contents match the input
};

// Expands the input over the standard pairs of its bidegree. With a matroid,
// works modulo the circuit ideal over the independent-row pairs, first
// certifying they form a basis of the graded piece; with m == nullptr, works
// in the free algebra where the standard pairs are always a basis.
StraighteningResult straighten(const Matroid* m, const TabPair& input);
StraighteningResult straighten(const Matroid* m, const Element& input,
                               const Bidegree& d);

// Image of tab(T|S) under the realization (e_j|p) -> (f(e_j)|p): row words
// map to wedges of the matrix columns, expanded over the ambient
// coordinates. Letters of the result index rows of f.
Element realization_image(const RatMatrix& f, const TabPair& t);

struct GamasReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  TabPair counterexample;              // valid when !ok
  bool counterexample_nonzero = false;  // image state at the counterexample
};

// Nonvanishing sweep: over every shape with at most max_boxes boxes, every
// row-strict T with entries in the column set of f and every column-strict
// S, the realization image is nonzero exactly when all rows of T are
// independent in the column matroid of f.
GamasReport gamas_check(const RatMatrix& f, int max_boxes);

// True when (w | p^(alpha)) lies in the rational row space of
// ideal_relations(m, d), i.e. vanishes in W(M) tensor Q.
bool dependent_slice_vanishes(const Matroid& m, const Word& w,
                              const Composition& alpha, const Bidegree& d);

}  // namespace whitney

#endif  // WHITNEY_WHITNEY_HPP_
