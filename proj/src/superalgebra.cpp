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

#include "whitney/superalgebra.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace whitney {

namespace {

// Sorts pairs by (letter, place) counting transpositions; nullopt on a
// repeated pair (the monomial is zero).
std::optional<std::pair<LetterPlaceMonomial, int>> canonicalize(
    LetterPlaceMonomial pairs) {
  int sign = 1;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    LetterPlacePair key = pairs[i];
    std::size_t j = i;
    while (j > 0 && key < pairs[j - 1]) {
      pairs[j] = pairs[j - 1];
      --j;
      sign = -sign;
    }
    pairs[j] = key;
  }
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i] == pairs[i - 1]) return std::nullopt;
  }
  return std::make_pair(std::move(pairs), sign);
}

// Merges two sorted monomials; counts crossings for the Koszul sign.
// nullopt when they share a pair.
std::optional<std::pair<LetterPlaceMonomial, int>> merge_monomials(
    const LetterPlaceMonomial& a, const LetterPlaceMonomial& b) {
  LetterPlaceMonomial out;
  out.reserve(a.size() + b.size());
  int sign = 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] moves past the a.size() - i remaining odd factors of a.
      if ((a.size() - i) % 2 != 0) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return std::make_pair(std::move(out), sign);
}

}  // namespace

Element Element::one() {
  Element e;
  e.add_term({}, Rat(1));
  return e;
}

Element Element::generator(int letter, int place) {
  if (letter < 1 || place < 1) {
    throw std::invalid_argument("letters and places are positive");
  }
  Element e;
  e.add_term({{letter, place}}, Rat(1));
  return e;
}

Element Element::monomial(LetterPlaceMonomial pairs, Rat coeff) {
  Element e;
  e.add_term(std::move(pairs), std::move(coeff));
  return e;
}

Rat Element::coefficient(const LetterPlaceMonomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Element::add_term(LetterPlaceMonomial pairs, Rat coeff) {
  if (coeff == 0) return;
  auto canon = canonicalize(std::move(pairs));
  if (!canon) return;
  if (canon->second < 0) coeff = -coeff;
  auto [it, inserted] = terms_.emplace(std::move(canon->first), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [mono, coeff] : other.terms_) {
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [mono, coeff] : other.terms_) {
    auto [it, inserted] = terms_.emplace(mono, -coeff);
    if (!inserted) {
      it->second -= coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Element& Element::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= scalar;
  return *this;
}

Element ext_mul(const Element& a, const Element& b) {
  Element out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto merged = merge_monomials(ma, mb);
      if (!merged) continue;
      Rat coeff = ca * cb;
      if (merged->second < 0) coeff = -coeff;
      out.add_term(std::move(merged->first), std::move(coeff));
    }
  }
  return out;
}

PlaceSum dp_mul(const PlaceSum& a, const PlaceSum& b) {
  PlaceSum out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Int coeff = ca * cb;
      PlaceMonomial merged = ma;
      for (const auto& [place, exp] : mb) {
        const auto it = merged.find(place);
        if (it == merged.end()) {
          merged[place] = exp;
        } else {
          coeff *= binomial(it->second + exp, exp);
          it->second += exp;
        }
      }
      out[merged] += coeff;
      if (out[merged] == 0) out.erase(merged);
    }
  }
  return out;
}

std::pair<Int, PlaceMonomial> dp_normalize(
    const std::vector<std::pair<int, int>>& factors) {
  Int coeff = 1;
  PlaceMonomial mono;
  for (const auto& [place, exp] : factors) {
    if (place < 1 || exp < 0) throw std::invalid_argument("bad dp factor");
    if (exp == 0) continue;
    const auto it = mono.find(place);
    if (it == mono.end()) {
      mono[place] = exp;
    } else {
      coeff *= binomial(it->second + exp, exp);
      it->second += exp;
    }
  }
  return {coeff, mono};
}

namespace {

void slice_rec(const Word& w, const Composition& alpha, std::size_t block,
               std::vector<int>& unused, std::vector<Word>& blocks,
               std::vector<int>& positions, std::vector<SlicedWord>& out) {
  if (block == alpha.size()) {
    // Koszul sign: parity of inversions of the concatenated position list.
    int inv = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      for (std::size_t j = i + 1; j < positions.size(); ++j) {
        if (positions[i] > positions[j]) ++inv;
      }
    }
    out.push_back(SlicedWord{inv % 2 == 0 ? 1 : -1, blocks});
    return;
  }
  const int need = alpha[block];
  // Choose an increasing subsequence of the unused positions.
  std::vector<int> chosen;
  auto choose = [&](auto&& self, std::size_t start, int left) -> void {
    if (left == 0) {
      std::vector<int> remaining;
      for (int p : unused) {
        if (!std::binary_search(chosen.begin(), chosen.end(), p)) {
          remaining.push_back(p);
        }
      }
      Word block_word;
      for (int p : chosen) block_word.push_back(w[p]);
      blocks.push_back(std::move(block_word));
      positions.insert(positions.end(), chosen.begin(), chosen.end());
      std::vector<int> saved = std::move(unused);
      unused = std::move(remaining);
      slice_rec(w, alpha, block + 1, unused, blocks, positions, out);
      unused = std::move(saved);
      positions.resize(positions.size() - chosen.size());
      blocks.pop_back();
      return;
    }
    for (std::size_t i = start; i + left <= unused.size(); ++i) {
      chosen.push_back(unused[i]);
      self(self, i + 1, left - 1);
      chosen.pop_back();
    }
  };
  choose(choose, 0, need);
}

}  // namespace

std::vector<SlicedWord> coproduct_slice_letters(const Word& w,
                                                const Composition& alpha) {
  int total = 0;
  for (int part : alpha) {
    if (part < 0) throw std::invalid_argument("negative slice part");
    total += part;
  }
  if (total != static_cast<int>(w.size())) {
    throw std::invalid_argument("slice sizes must sum to the word length");
  }
  std::vector<int> unused(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) unused[i] = static_cast<int>(i);
  std::vector<Word> blocks;
  std::vector<int> positions;
  std::vector<SlicedWord> out;
  slice_rec(w, alpha, 0, unused, blocks, positions, out);
  return out;
}

std::vector<std::vector<PlaceMonomial>> coproduct_places(int place, int power,
                                                         int parts) {
  if (place < 1 || power < 0 || parts < 0) {
    throw std::invalid_argument("bad coproduct_places arguments");
  }
  std::vector<std::vector<PlaceMonomial>> out;
  if (parts == 0) {
    if (power == 0) out.push_back({});
    return out;
  }
  std::vector<int> split(parts, 0);
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == parts - 1) {
      split[slot] = left;
      std::vector<PlaceMonomial> factors(parts);
      for (int i = 0; i < parts; ++i) {
        if (split[i] > 0) factors[i][place] = split[i];
      }
      out.push_back(std::move(factors));
      return;
    }
    for (int take = 0; take <= left; ++take) {
      split[slot] = take;
      self(self, slot + 1, left - take);
    }
  };
  rec(rec, 0, power);
  return out;
}

Element laplace_pair(const Word& w, const PlaceMonomial& q) {
  {
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("laplace_pair: repeated letter");
    }
  }
  int degree = 0;
  for (const auto& [place, exp] : q) {
    if (exp <= 0) throw std::invalid_argument("bad place exponent");
    degree += exp;
  }
  if (degree != static_cast<int>(w.size())) return Element::zero();
  if (w.empty()) return Element::one();

  Composition alpha;
  std::vector<int> places;
  for (const auto& [place, exp] : q) {
    places.push_back(place);
    alpha.push_back(exp);
  }

  Element out;
  for (const SlicedWord& slice : coproduct_slice_letters(w, alpha)) {
    // (e_{i_1} ... e_{i_k} | p^(k)) = (e_{i_1}|p) ... (e_{i_k}|p).
    LetterPlaceMonomial pairs;
    for (std::size_t b = 0; b < slice.blocks.size(); ++b) {
      for (int letter : slice.blocks[b]) {
        pairs.emplace_back(letter, places[b]);
      }
    }
    out.add_term(std::move(pairs), Rat(slice.sign));
  }
  return out;
}

Element laplace_pair(const Word& w, const PlaceSum& q) {
  Element out;
  for (const auto& [mono, coeff] : q) {
    Element part = laplace_pair(w, mono);
    part *= Rat(coeff);
    out += part;
  }
  return out;
}

Element tensor_to_letterplace(const TensorOfWords& t) {
  Element out = Element::one();
  for (std::size_t slot = 0; slot < t.size(); ++slot) {
    const Word& w = t[slot];
    if (w.empty()) continue;
    {
      Word sorted = w;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return Element::zero();  // the slot word is zero in the exterior algebra
      }
    }
    PlaceMonomial q;
    q[static_cast<int>(slot) + 1] = static_cast<int>(w.size());
    out = ext_mul(out, laplace_pair(w, q));
    if (out.is_zero()) return out;
  }
  return out;
}

namespace {

Composition monomial_content(const LetterPlaceMonomial& mono, bool letters) {
  Composition content;
  for (const auto& [letter, place] : mono) {
    const int idx = letters ? letter : place;
    if (idx > static_cast<int>(content.size())) content.resize(idx, 0);
    ++content[idx - 1];
  }
  return content;
}

Composition element_content(const Element& e, bool letters) {
  if (e.is_zero()) {
    throw std::invalid_argument("content of the zero element is undefined");
  }
  Composition content = monomial_content(e.terms().begin()->first, letters);
  for (const auto& [mono, coeff] : e.terms()) {
    if (monomial_content(mono, letters) != content) {
      throw std::invalid_argument("element is not homogeneous");
    }
  }
  return content;
}

}  // namespace

Composition letter_content(const Element& e) {
  return element_content(e, true);
}

Composition place_content(const Element& e) {
  return element_content(e, false);
}

}  // namespace whitney
