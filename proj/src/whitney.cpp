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

#include "whitney/whitney.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include "whitney/parallel.hpp"

namespace whitney {

int Bidegree::letter_total() const {
  return std::accumulate(letters.begin(), letters.end(), 0);
}

int Bidegree::place_total() const {
  return std::accumulate(places.begin(), places.end(), 0);
}

bool operator==(const Bidegree& a, const Bidegree& b) {
  return a.letters == b.letters && a.places == b.places;
}

namespace {

void check_balanced(const Bidegree& d) {
  if (d.letter_total() != d.place_total()) {
    throw std::invalid_argument("bidegree totals differ");
  }
  for (int v : d.letters) {
    if (v < 0) throw std::invalid_argument("negative letter multiplicity");
  }
  for (int v : d.places) {
    if (v < 0) throw std::invalid_argument("negative place multiplicity");
  }
}

// Pads with zeros on the right; contents of equal support compare equal.
bool same_content(const Composition& a, const Composition& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const int va = i < a.size() ? a[i] : 0;
    const int vb = i < b.size() ? b[i] : 0;
    if (va != vb) return false;
  }
  return true;
}

std::vector<Rat> element_coordinates(
    const Element& e, const std::map<LetterPlaceMonomial, std::size_t>& index) {
  std::vector<Rat> coords(index.size(), Rat(0));
  for (const auto& [mono, coeff] : e.terms()) {
    const auto it = index.find(mono);
    if (it == index.end()) {
      throw std::invalid_argument("element leaves the expected bidegree");
    }
    coords[it->second] = coeff;
  }
  return coords;
}

}  // namespace

std::vector<LetterPlaceMonomial> monomial_basis(const Bidegree& d) {
  check_balanced(d);
  std::vector<LetterPlaceMonomial> out;
  Composition remaining = d.places;
  LetterPlaceMonomial current;
  // Letters ascending, places ascending within a letter: monomials come out
  // canonically sorted.
  auto rec = [&](auto&& self, std::size_t letter_idx) -> void {
    if (letter_idx == d.letters.size()) {
      out.push_back(current);
      return;
    }
    const int need = d.letters[letter_idx];
    std::vector<int> chosen;
    auto choose = [&](auto&& inner, int from, int left) -> void {
      if (left == 0) {
        for (int p : chosen) {
          current.emplace_back(static_cast<int>(letter_idx) + 1, p);
        }
        self(self, letter_idx + 1);
        current.resize(current.size() - chosen.size());
        return;
      }
      for (int p = from; p + left - 1 <= static_cast<int>(remaining.size());
           ++p) {
        if (remaining[p - 1] == 0) continue;
        --remaining[p - 1];
        chosen.push_back(p);
        inner(inner, p + 1, left - 1);
        chosen.pop_back();
        ++remaining[p - 1];
      }
    };
    choose(choose, 1, need);
  };
  rec(rec, 0);
  return out;
}

IntMatrix ideal_relations(const Matroid& m, const Bidegree& d) {
  check_balanced(d);
  const std::vector<LetterPlaceMonomial> basis = monomial_basis(d);
  std::map<LetterPlaceMonomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  std::vector<std::vector<Int>> rows;
  const int n_letters = static_cast<int>(d.letters.size());
  for (const auto& circuit : m.circuits()) {
    // The circuit word must fit inside the letter multiplicities.
    if (std::any_of(circuit.begin(), circuit.end(), [&](int e) {
          return e > n_letters || d.letters[e - 1] < 1;
        })) {
      continue;
    }
    Composition complement_letters = d.letters;
    for (int e : circuit) --complement_letters[e - 1];
    const Word word(circuit.begin(), circuit.end());

    for (const Composition& alpha :
         all_compositions(static_cast<int>(circuit.size()),
                          static_cast<int>(d.places.size()))) {
      Composition complement_places(d.places.size());
      bool fits = true;
      for (std::size_t j = 0; j < d.places.size(); ++j) {
        complement_places[j] = d.places[j] - alpha[j];
        if (complement_places[j] < 0) fits = false;
      }
      if (!fits) continue;
      PlaceMonomial q;
      for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] > 0) q[static_cast<int>(j) + 1] = alpha[j];
      }
      const Element generator = laplace_pair(word, q);
      if (generator.is_zero()) continue;

      for (const LetterPlaceMonomial& tail :
           monomial_basis(Bidegree{complement_letters, complement_places})) {
        const Element product =
            ext_mul(generator, Element::monomial(tail, Rat(1)));
        if (product.is_zero()) continue;
        std::vector<Int> row(basis.size(), Int(0));
        for (const auto& [mono, coeff] : product.terms()) {
          row[index.at(mono)] = rational_to_int(coeff);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  IntMatrix out;
  out.rows = rows.size();
  out.cols = basis.size();
  out.a = std::move(rows);
  return out;
}

GradedPieceReport graded_piece(const Matroid& m, const Bidegree& d) {
  GradedPieceReport report;
  report.monomial_count = monomial_basis(d).size();

  const IntMatrix relations = ideal_relations(m, d);
  const SmithNormalForm snf = smith_normal_form(relations);
  report.relation_rank = snf.rank;
  report.free_rank = report.monomial_count - snf.rank;
  for (const Int& factor : snf.invariant_factors) {
    if (factor > 1) report.torsion_invariants.push_back(factor);
  }

  report.standard_pair_count =
      enumerate_standard_pairs(d.letters, d.places,
                               [&](const std::vector<int>& row) {
                                 return m.is_independent(row);
                               })
          .size();
  return report;
}

bool standard_pairs_span(const Matroid& m, const Bidegree& d) {
  const std::vector<LetterPlaceMonomial> basis = monomial_basis(d);
  std::map<LetterPlaceMonomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  RowEchelon echelon(basis.size());
  const IntMatrix relations = ideal_relations(m, d);
  for (const auto& row : relations.a) {
    std::vector<Rat> rat_row(row.begin(), row.end());
    echelon.insert(std::move(rat_row));
  }
  for (const TabPair& pair :
       enumerate_standard_pairs(d.letters, d.places,
                                [&](const std::vector<int>& row) {
                                  return m.is_independent(row);
                                })) {
    echelon.insert(element_coordinates(tab_element(pair), index));
  }
  return echelon.rank() == basis.size();
}

FreedomCheckReport freedom_basis_check(const std::vector<int>& bits,
                                       int max_places, int max_letter_total) {
  if (max_places < 0 || max_letter_total < 0) {
    throw std::invalid_argument("bounds must be nonnegative");
  }
  const Matroid m = freedom(bits);
  std::vector<Bidegree> bidegrees;
  for (int total = 1; total <= max_letter_total; ++total) {
    for (const Composition& letters : all_compositions(total, m.n())) {
      for (const Composition& places : all_compositions(total, max_places)) {
        bidegrees.push_back(Bidegree{letters, places});
      }
    }
  }
  // Pieces are independent jobs; the failure scan below keeps the reported
  // failure the first one in enumeration order regardless of worker count.
  std::vector<GradedPieceReport> pieces(bidegrees.size());
  parallel_for(bidegrees.size(), [&](std::size_t i) {
    pieces[i] = graded_piece(m, bidegrees[i]);
  });
  FreedomCheckReport report;
  report.bidegrees_checked = bidegrees.size();
  for (std::size_t i = 0; i < bidegrees.size(); ++i) {
    if (pieces[i].free_rank != pieces[i].standard_pair_count ||
        !pieces[i].torsion_invariants.empty()) {
      report.ok = false;
      report.first_failure = bidegrees[i];
      report.failure_data = pieces[i];
      report.bidegrees_checked = i + 1;
      return report;
    }
  }
  return report;
}

namespace {

StraighteningResult straighten_coordinates(const Matroid* m,
                                           const Element& input,
                                           const Bidegree& d,
                                           const Partition* input_shape,
                                           const Composition* input_letters,
                                           const Composition* input_places) {
  check_balanced(d);
  StraighteningResult result;
  const std::vector<LetterPlaceMonomial> basis = monomial_basis(d);
  std::map<LetterPlaceMonomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  RowPredicate predicate;
  if (m != nullptr) {
    predicate = [m](const std::vector<int>& row) {
      return m->is_independent(row);
    };
  }
  const std::vector<TabPair> pairs =
      enumerate_standard_pairs(d.letters, d.places, predicate);

  RatMatrix rows = RatMatrix::zero(0, basis.size());
  for (const TabPair& pair : pairs) {
    rows.a.push_back(element_coordinates(tab_element(pair), index));
  }
  std::size_t relation_rank = 0;
  RowEchelon echelon(basis.size());
  if (m != nullptr) {
    const IntMatrix relations = ideal_relations(*m, d);
    for (const auto& row : relations.a) {
      echelon.insert(std::vector<Rat>(row.begin(), row.end()));
      rows.a.emplace_back(row.begin(), row.end());
    }
    relation_rank = echelon.rank();
  }
  rows.rows = rows.a.size();

  // Certify the basis: the pairs must be independent modulo the relations
  // and fill the quotient. Relation rows themselves may be redundant.
  std::size_t independent_pairs = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (echelon.insert(rows.a[i])) ++independent_pairs;
  }
  result.basis_certified = independent_pairs == pairs.size() &&
                           relation_rank + pairs.size() == basis.size();

  const auto solution = solve_in_span(rows, element_coordinates(input, index));
  result.in_span = solution.has_value();
  if (!solution) return result;

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Rat& coeff = (*solution)[i];
    if (coeff == 0) continue;
    result.coefficients.emplace_back(pairs[i], coeff);
    if (input_shape != nullptr &&
        !dominance_leq(*input_shape, pairs[i].letters.shape())) {
      result.dominance_ok = false;
    }
    if (input_letters != nullptr &&
        (!same_content(*input_letters, content(pairs[i].letters)) ||
         !same_content(*input_places, content(pairs[i].places)))) {
      result.content_ok = false;
    }
  }
  return result;
}

}  // namespace

StraighteningResult straighten(const Matroid* m, const TabPair& input) {
  if (input.letters.shape() != input.places.shape()) {
    throw std::invalid_argument("tab pair shapes differ");
  }
  Composition letters = content(input.letters);
  Composition places = content(input.places);
  if (m != nullptr) {
    if (static_cast<int>(letters.size()) > m->n()) {
      throw std::invalid_argument("letter exceeds the ground set");
    }
    letters.resize(m->n(), 0);
  }
  const Partition shape = input.letters.shape();
  const Bidegree d{letters, places};
  return straighten_coordinates(m, tab_element(input), d, &shape, &letters,
                                &places);
}

StraighteningResult straighten(const Matroid* m, const Element& input,
                               const Bidegree& d) {
  if (!input.is_zero()) {
    if (!same_content(letter_content(input), d.letters) ||
        !same_content(place_content(input), d.places)) {
      throw std::invalid_argument("input is not homogeneous of bidegree d");
    }
  }
  return straighten_coordinates(m, input, d, nullptr, nullptr, nullptr);
}

namespace {

// Wedge of the columns of f indexed by w, expanded over size-|w| row sets:
// list of (ambient word, minor). Empty iff the columns are dependent.
std::vector<std::pair<Word, Rat>> column_wedge(const RatMatrix& f,
                                               const Word& w) {
  const int k = static_cast<int>(w.size());
  const int ambient = static_cast<int>(f.rows);
  std::vector<std::pair<Word, Rat>> out;
  if (k > ambient) return out;
  std::vector<int> rows(k);
  std::iota(rows.begin(), rows.end(), 0);
  for (;;) {
    // Minor of f with these rows and the columns of w, by cofactor recursion.
    RatMatrix sub = RatMatrix::zero(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        sub.a[i][j] = f.a[rows[i]][w[j] - 1];
      }
    }
    Rat det(1);
    bool singular = false;
    for (int col = 0; col < k && !singular; ++col) {
      int pivot = col;
      while (pivot < k && sub.a[pivot][col] == 0) ++pivot;
      if (pivot == k) {
        singular = true;
        break;
      }
      if (pivot != col) {
        std::swap(sub.a[pivot], sub.a[col]);
        det = -det;
      }
      det *= sub.a[col][col];
      for (int r = col + 1; r < k; ++r) {
        if (sub.a[r][col] == 0) continue;
        const Rat factor = sub.a[r][col] / sub.a[col][col];
        for (int c = col; c < k; ++c) sub.a[r][c] -= factor * sub.a[col][c];
      }
    }
    if (!singular && det != 0) {
      Word ambient_word;
      for (int r : rows) ambient_word.push_back(r + 1);
      out.emplace_back(std::move(ambient_word), det);
    }
    int p = k - 1;
    while (p >= 0 && rows[p] == ambient - k + p) --p;
    if (p < 0) break;
    ++rows[p];
    for (int q = p + 1; q < k; ++q) rows[q] = rows[q - 1] + 1;
  }
  return out;
}

// Divided-power place monomial of one row of the places tableau.
std::pair<Int, PlaceMonomial> row_place_monomial(const std::vector<int>& row) {
  std::vector<std::pair<int, int>> factors;
  for (int place : row) {
    if (!factors.empty() && factors.back().first == place) {
      ++factors.back().second;
    } else {
      factors.emplace_back(place, 1);
    }
  }
  return dp_normalize(factors);
}

}  // namespace

Element realization_image(const RatMatrix& f, const TabPair& t) {
  if (t.letters.shape() != t.places.shape()) {
    throw std::invalid_argument("tab pair shapes differ");
  }
  Element out = Element::one();
  for (std::size_t r = 0; r < t.letters.rows.size(); ++r) {
    const Word& w = t.letters.rows[r];
    {
      Word sorted = w;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return Element::zero();  // repeated letter: the wedge is zero
      }
    }
    for (int letter : w) {
      if (letter < 1 || letter > static_cast<int>(f.cols)) {
        throw std::invalid_argument("letter outside the realization columns");
      }
    }
    const auto [dp_coeff, q] = row_place_monomial(t.places.rows[r]);
    Element row_image;
    for (const auto& [ambient_word, minor] : column_wedge(f, w)) {
      Element term = laplace_pair(ambient_word, q);
      term *= minor;
      row_image += term;
    }
    row_image *= Rat(dp_coeff);
    out = ext_mul(out, row_image);
    if (out.is_zero()) return out;
  }
  return out;
}

namespace {

// Deterministic pseudo-random weight per monomial: a nonzero functional
// value here proves the element nonzero; a zero falls back to the full sum.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Int monomial_weight(const LetterPlaceMonomial& mono) {
  std::uint64_t h = 0x12345678u;
  for (const auto& [letter, place] : mono) {
    h = splitmix64(h ^ (static_cast<std::uint64_t>(letter) << 32 ^
                        static_cast<std::uint64_t>(place)));
  }
  // Keep weights positive and modest so products stay cheap.
  return Int((h >> 16) | 1u);
}

Rat functional_value(const Element& e) {
  Rat total(0);
  for (const auto& [mono, coeff] : e.terms()) {
    total += coeff * Rat(monomial_weight(mono));
  }
  return total;
}

}  // namespace

GamasReport gamas_check(const RatMatrix& f, int max_boxes) {
  const Matroid m = Matroid::from_matrix(f);
  const int n = m.n();
  GamasReport report;

  // Wedge expansions per distinct row word, shared across shapes.
  std::map<Word, std::vector<std::pair<Word, Rat>>> wedge_cache;
  const auto wedge_of = [&](const Word& w)
      -> const std::vector<std::pair<Word, Rat>>& {
    auto it = wedge_cache.find(w);
    if (it == wedge_cache.end()) {
      it = wedge_cache.emplace(w, column_wedge(f, w)).first;
    }
    return it->second;
  };

  for (int boxes = 1; boxes <= max_boxes; ++boxes) {
    for (const Partition& shape : partitions_of(boxes)) {
      if (!shape.empty() && shape[0] > n) continue;
      const std::vector<Tableau> letter_tabs =
          row_strict_fillings_free(shape, n);
      if (letter_tabs.empty()) continue;
      // Place entries above `boxes` only relabel places order-preservingly,
      // which is an algebra isomorphism; capping them loses no cases.
      const std::vector<Tableau> place_tabs =
          column_strict_fillings_free(shape, boxes);
      if (place_tabs.empty()) continue;

      // tab(ambient rows | S) and its functional value, keyed by the chosen
      // ambient words and the index of S; shared across letter tableaux.
      std::map<std::pair<std::vector<Word>, std::size_t>, Rat> value_cache;

      for (const Tableau& letters : letter_tabs) {
        bool all_rows_independent = true;
        for (const auto& row : letters.rows) {
          if (!m.is_independent(row)) {
            all_rows_independent = false;
            break;
          }
        }

        std::vector<const std::vector<std::pair<Word, Rat>>*> row_wedges;
        bool image_trivially_zero = false;
        for (const auto& row : letters.rows) {
          const auto& wedge = wedge_of(row);
          if (wedge.empty()) {
            image_trivially_zero = true;
            break;
          }
          row_wedges.push_back(&wedge);
        }

        if (image_trivially_zero) {
          // Some row has a zero wedge, so the image is zero for every S.
          report.pairs_checked += place_tabs.size();
          if (all_rows_independent) {
            report.ok = false;
            report.counterexample = TabPair{letters, place_tabs.front()};
            report.counterexample_nonzero = false;
            return report;
          }
          continue;
        }

        // All combinations of ambient words across the rows.
        std::vector<std::pair<std::vector<Word>, Rat>> tuples;
        {
          std::vector<Word> chosen(letters.rows.size());
          auto rec = [&](auto&& self, std::size_t r, Rat coeff) -> void {
            if (r == row_wedges.size()) {
              tuples.emplace_back(chosen, coeff);
              return;
            }
            for (const auto& [word, minor] : *row_wedges[r]) {
              chosen[r] = word;
              self(self, r + 1, coeff * minor);
            }
          };
          rec(rec, 0, Rat(1));
        }

        for (std::size_t s_idx = 0; s_idx < place_tabs.size(); ++s_idx) {
          const Tableau& places = place_tabs[s_idx];
          ++report.pairs_checked;
          Rat probe(0);
          for (const auto& [words, coeff] : tuples) {
            auto key = std::make_pair(words, s_idx);
            auto it = value_cache.find(key);
            if (it == value_cache.end()) {
              const Element tab =
                  tab_element(TabPair{Tableau{words}, places});
              it = value_cache.emplace(std::move(key), functional_value(tab))
                       .first;
            }
            probe += coeff * it->second;
          }
          bool nonzero;
          if (probe != 0) {
            nonzero = true;  // a linear functional witnessed it
          } else {
            Element image;
            for (const auto& [words, coeff] : tuples) {
              Element tab = tab_element(TabPair{Tableau{words}, places});
              tab *= coeff;
              image += tab;
            }
            nonzero = !image.is_zero();
          }
          if (nonzero != all_rows_independent) {
            report.ok = false;
            report.counterexample = TabPair{letters, places};
            report.counterexample_nonzero = nonzero;
            return report;
          }
        }
      }
    }
  }
  return report;
}

bool dependent_slice_vanishes(const Matroid& m, const Word& w,
                              const Composition& alpha, const Bidegree& d) {
  check_balanced(d);
  Composition word_letters(d.letters.size(), 0);
  for (int letter : w) {
    if (letter < 1 || letter > static_cast<int>(d.letters.size())) {
      throw std::invalid_argument("word letter outside the bidegree");
    }
    ++word_letters[letter - 1];
  }
  if (!same_content(word_letters, d.letters) || !same_content(alpha, d.places)) {
    throw std::invalid_argument("(w, alpha) does not match the bidegree");
  }

  const std::vector<LetterPlaceMonomial> basis = monomial_basis(d);
  std::map<LetterPlaceMonomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  PlaceMonomial q;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] < 0) throw std::invalid_argument("negative alpha part");
    if (alpha[j] > 0) q[static_cast<int>(j) + 1] = alpha[j];
  }
  const Element target = laplace_pair(w, q);
  if (target.is_zero()) return true;

  const IntMatrix relations = ideal_relations(m, d);
  RatMatrix rel = RatMatrix::zero(relations.rows, relations.cols);
  for (std::size_t r = 0; r < relations.rows; ++r) {
    rel.a[r].assign(relations.a[r].begin(), relations.a[r].end());
  }
  return solve_in_span(rel, element_coordinates(target, index)).has_value();
}

}  // namespace whitney
