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

#ifndef WHITNEY_SUPERALGEBRA_HPP_
#define WHITNEY_SUPERALGEBRA_HPP_

#include <map>
#include <utility>
#include <vector>

#include "whitney/numbers.hpp"

namespace whitney {

// Letters and places are positive integers. A letter-place pair (e_i | p_j)
// is an odd (anticommuting, square zero) generator; a monomial is a product
// of distinct pairs, canonically sorted by (letter, place).
using Word = std::vector<int>;         // sequence of letters
using Composition = std::vector<int>;  // nonnegative parts
using LetterPlacePair = std::pair<int, int>;
using LetterPlaceMonomial = std::vector<LetterPlacePair>;
using TensorOfWords = std::vector<Word>;

// A divided-power monomial in places: place -> exponent (> 0). The empty map
// is the unit. Products carry binomial coefficients, so sums are Z-linear
// combinations of monomials.
using PlaceMonomial = std::map<int, int>;
using PlaceSum = std::map<PlaceMonomial, Int>;

// Element of the letter-place superalgebra with rational coefficients.
// Coefficients of everything built from integral inputs stay integral; the
// rational carrier exists for straightening output and rational realizations.
class Element {
 public:
  Element() = default;

  static Element zero() { return Element(); }
  static Element one();
  static Element generator(int letter, int place);
  // Canonicalizes (sorts pairs, folds the sign into the coefficient);
  // a repeated pair makes the monomial zero.
  static Element monomial(LetterPlaceMonomial pairs, Rat coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<LetterPlaceMonomial, Rat>& terms() const { return terms_; }
  Rat coefficient(const LetterPlaceMonomial& mono) const;

  void add_term(LetterPlaceMonomial pairs, Rat coeff);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rat& scalar);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rat& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<LetterPlaceMonomial, Rat> terms_;  // nonzero coefficients only
};

// Exterior product with Koszul signs; repeated pairs kill the term.
Element ext_mul(const Element& a, const Element& b);

// Divided-power product: p^(j) p^(k) = C(j+k, k) p^(j+k), places commute.
PlaceSum dp_mul(const PlaceSum& a, const PlaceSum& b);

// Product of ordered divided-power factors (place, exponent), as one
// coefficient * monomial pair.
std::pair<Int, PlaceMonomial> dp_normalize(
    const std::vector<std::pair<int, int>>& factors);

// One summand of a letter coproduct slice: blocks keep the original relative
// order inside themselves; the sign is the Koszul sign of the shuffle.
struct SlicedWord {
  int sign;                  // +1 or -1
  std::vector<Word> blocks;  // blocks[i].size() == alpha[i]
};

// All slices of w into |alpha| blocks of the given sizes. Throws when
// sum(alpha) != |w| or any part is negative.
std::vector<SlicedWord> coproduct_slice_letters(const Word& w,
                                                const Composition& alpha);

// All splittings of p^(power) into `parts` divided-power factors (weak
// compositions); every coefficient is +1. Factors may be empty monomials.
std::vector<std::vector<PlaceMonomial>> coproduct_places(int place, int power,
                                                         int parts);

// Laplace pairing (w | q) of a word with a divided-power place monomial.
// Zero when degrees differ; throws on a repeated letter in w.
Element laplace_pair(const Word& w, const PlaceMonomial& q);

// Linear extension of laplace_pair over a divided-power sum.
Element laplace_pair(const Word& w, const PlaceSum& q);

// Image of w_1 (x) ... (x) w_k under the standard embedding: slot i pairs
// with place i. A slot word with a repeated letter is zero (not an error:
// such tensors are zero upstream).
Element tensor_to_letterplace(const TensorOfWords& t);

// Letter/place multiplicity vectors of a homogeneous element; index i holds
// the multiplicity of letter (place) i+1. Throws when terms disagree.
Composition letter_content(const Element& e);
Composition place_content(const Element& e);

}  // namespace whitney

#endif  // WHITNEY_SUPERALGEBRA_HPP_
