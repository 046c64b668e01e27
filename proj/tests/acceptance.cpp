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

// Acceptance gate: one check per headline claim, each printed as a PASS or
// FAIL line with its runtime. Exits nonzero if anything fails or a budgeted
// check overruns. All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "whitney/io.hpp"
#include "whitney/matroid.hpp"
#include "whitney/superalgebra.hpp"
#include "whitney/symrep.hpp"
#include "whitney/tableaux.hpp"
#include "whitney/whitney.hpp"

using whitney::Bidegree;
using whitney::Composition;
using whitney::Element;
using whitney::GroupAlgebraElement;
using whitney::Int;
using whitney::Matroid;
using whitney::Partition;
using whitney::PlaceMonomial;
using whitney::PlaceSum;
using whitney::Rat;
using whitney::RatMatrix;
using whitney::Tableau;
using whitney::TabPair;
using whitney::Word;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Check = std::function<Outcome()>;

RatMatrix example6_matrix() {
  RatMatrix m = RatMatrix::zero(3, 6);
  const int entries[3][6] = {
      {1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 6; ++c) m.a[r][c] = entries[r][c];
  }
  return m;
}

RatMatrix identity_matrix(int n) {
  RatMatrix m = RatMatrix::zero(n, n);
  for (int i = 0; i < n; ++i) m.a[i][i] = 1;
  return m;
}

Matroid uniform(int k, int n) {
  return Matroid::from_circuits(n, oracles::uniform_circuits(k, n));
}

std::vector<std::vector<int>> bit_strings(int len) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::vector<int> bits;
    for (int i = 0; i < len; ++i) bits.push_back((mask >> i) & 1);
    out.push_back(bits);
  }
  return out;
}

// Hook multiplicities from the character table against the nbc counts.
bool hooks_match_nbc(const Matroid& m, std::string* why) {
  const auto table = whitney::multiplicity_table(m);
  for (int k = 1; k <= m.n(); ++k) {
    const whitney::HookShape hook{k, m.n()};
    const long by_character = table.at(hook.partition());
    const long by_nbc = whitney::hook_multiplicity_nbc(m, k);
    if (by_character != by_nbc) {
      std::ostringstream os;
      os << "hook k=" << k << ": character " << by_character << " vs nbc "
         << by_nbc;
      *why = os.str();
      return false;
    }
  }
  return true;
}

Outcome criterion1() {
  const Matroid m = Matroid::from_matrix(example6_matrix());
  std::set<std::vector<int>> small_broken;
  for (const auto& b : whitney::broken_circuits(m)) {
    if (b.size() == 2) small_broken.insert(b);
  }
  if (small_broken !=
      std::set<std::vector<int>>{{2, 4}, {3, 5}, {3, 6}}) {
    return {false, "broken circuits of size two differ"};
  }
  const auto nbc3 = whitney::nbc_sets(m, 3, false);
  const std::vector<std::vector<int>> expected = {
      {1, 2, 3}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4},
      {1, 4, 5}, {1, 4, 6}, {1, 5, 6}};
  if (nbc3 != expected) return {false, "nbc 3-sets differ"};
  const long mult = whitney::multiplicity(m, Partition{3, 1, 1, 1});
  if (mult != 7) {
    return {false, "hook multiplicity " + std::to_string(mult) + " != 7"};
  }
  return {true, "broken circuits {24,35,36}, 7 nbc 3-sets, multiplicity 7"};
}

Outcome criterion2() {
  std::vector<Matroid> corpus;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) corpus.push_back(uniform(k, n));
  }
  for (int len = 1; len <= 6; ++len) {
    for (const auto& bits : bit_strings(len)) {
      corpus.push_back(whitney::freedom(bits));
    }
  }
  corpus.push_back(Matroid::from_matrix(example6_matrix()));
  corpus.push_back(Matroid::from_circuits(3, {{1}, {2, 3}}));
  corpus.push_back(Matroid::from_circuits(4, {{2}, {3}}));
  if (corpus.size() < 20) return {false, "corpus too small"};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::string why;
    if (!hooks_match_nbc(corpus[i], &why)) {
      return {false, "matroid #" + std::to_string(i) + ": " + why};
    }
  }
  return {true, std::to_string(corpus.size()) +
                    " matroids, all hook multiplicities = nbc counts"};
}

Outcome criterion3() {
  std::size_t bidegrees = 0;
  int sequences = 0;
  for (int len = 1; len <= 5; ++len) {
    for (const auto& bits : bit_strings(len)) {
      const auto report = whitney::freedom_basis_check(bits, 3, 5);
      if (!report.ok) {
        std::ostringstream os;
        os << "sequence ";
        for (int b : bits) os << b;
        os << " fails (free rank " << report.failure_data.free_rank
           << ", standard pairs " << report.failure_data.standard_pair_count
           << ", torsion " << report.failure_data.torsion_invariants.size()
           << ")";
        return {false, os.str()};
      }
      bidegrees += report.bidegrees_checked;
      ++sequences;
    }
  }
  std::ostringstream os;
  os << sequences << " sequences, " << bidegrees
     << " bidegrees free with matching standard-pair counts";
  return {true, os.str()};
}

Outcome criterion4() {
  std::size_t pieces = 0;
  std::size_t straightened = 0;
  for (int n = 1; n <= 4; ++n) {
    const Matroid boolean = Matroid::from_circuits(n, {});
    for (int d = 1; d <= 4; ++d) {
      for (const Composition& letters : whitney::all_compositions(d, n)) {
        for (const Composition& places : whitney::all_compositions(d, d)) {
          const auto piece = whitney::graded_piece(boolean, {letters, places});
          if (piece.relation_rank != 0 ||
              piece.monomial_count != piece.standard_pair_count) {
            return {false, "monomial count != standard pair count"};
          }
          ++pieces;
        }
      }
    }
    // Straightening certificates over genuinely non-standard inputs: S only
    // has to share the shape, not be column strict.
    for (int d = 1; d <= 4; ++d) {
      for (const Partition& shape : whitney::partitions_of(d)) {
        const auto ts = whitney::row_strict_fillings_free(shape, n);
        auto ss = whitney::row_strict_fillings_free(shape, d);
        const auto extra = whitney::column_strict_fillings_free(shape, d);
        ss.insert(ss.end(), extra.begin(), extra.end());
        for (const Tableau& t : ts) {
          for (const Tableau& s : ss) {
            const auto r = whitney::straighten(nullptr, TabPair{t, s});
            if (!(r.basis_certified && r.in_span && r.dominance_ok &&
                  r.content_ok)) {
              return {false, "straightening certificate failed"};
            }
            ++straightened;
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << pieces << " graded pieces counted, " << straightened
     << " expansions certified (dominance + content)";
  return {true, os.str()};
}

Outcome criterion5() {
  std::size_t pairs = 0;
  const RatMatrix random24 = whitney::random_rational_matrix(2, 4, 12345);
  const auto uniform24 = oracles::uniform_circuits(2, 4);
  const auto random24_circuits = Matroid::from_matrix(random24).circuits();
  if (std::set<std::vector<int>>(random24_circuits.begin(),
                                 random24_circuits.end()) !=
      std::set<std::vector<int>>(uniform24.begin(), uniform24.end())) {
    return {false, "seeded 2x4 matrix is not generic"};
  }
  std::vector<RatMatrix> realizations = {example6_matrix(), identity_matrix(1),
                                         identity_matrix(2), identity_matrix(3),
                                         identity_matrix(4), random24};
  for (const RatMatrix& f : realizations) {
    const auto report = whitney::gamas_check(f, 6);
    if (!report.ok) {
      std::ostringstream os;
      os << "counterexample with "
         << (report.counterexample_nonzero ? "nonzero" : "zero")
         << " image at a "
         << (report.counterexample_nonzero ? "dependent" : "independent")
         << "-row pair";
      return {false, os.str()};
    }
    pairs += report.pairs_checked;
  }
  std::ostringstream os;
  os << realizations.size() << " realizations, " << pairs
     << " pairs: nonzero image iff rows independent";
  return {true, os.str()};
}

Outcome criterion6() {
  std::vector<Matroid> corpus;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) corpus.push_back(uniform(k, n));
  }
  for (int k = 2; k <= 4; ++k) corpus.push_back(uniform(k, 7));
  for (int len = 1; len <= 6; ++len) {
    for (const auto& bits : bit_strings(len)) {
      corpus.push_back(whitney::freedom(bits));
    }
  }
  corpus.push_back(whitney::freedom({1, 0, 1, 0, 1, 0, 1}));
  const Matroid m6 = Matroid::from_matrix(example6_matrix());
  corpus.push_back(m6);
  corpus.push_back(whitney::direct_sum(m6, Matroid::from_circuits(1, {})));
  corpus.push_back(Matroid::from_circuits(7, {{1}, {4, 5}}));
  std::size_t partitions_checked = 0;
  for (const Matroid& m : corpus) {
    const Partition rho = whitney::rank_partition(m);
    for (std::size_t i = 0; i + 1 < rho.size(); ++i) {
      if (rho[i] < rho[i + 1]) return {false, "rank partition not sorted"};
    }
    for (const Partition& lam : whitney::partitions_of(m.n())) {
      if (whitney::independent_set_partition_exists(m, lam) !=
          whitney::dominance_leq(lam, rho)) {
        return {false, "partitionability and dominance disagree"};
      }
      ++partitions_checked;
    }
  }
  std::ostringstream os;
  os << corpus.size() << " matroids, " << partitions_checked
     << " shapes: partition exists iff dominated by rank partition";
  return {true, os.str()};
}

Outcome criterion7() {
  RatMatrix parallel = RatMatrix::zero(1, 2);
  parallel.a[0][0] = parallel.a[0][1] = 1;
  const std::vector<RatMatrix> realizations = {
      example6_matrix(),
      identity_matrix(2),
      identity_matrix(3),
      identity_matrix(4),
      parallel,
      whitney::random_rational_matrix(2, 4, 12345),
      whitney::random_rational_matrix(3, 6, 777),
      whitney::generic_freedom_matrix({1, 0, 1, 0, 1}, 99),
      whitney::generic_freedom_matrix({1, 1, 0, 1, 0, 0}, 99)};
  std::size_t labels = 0;
  for (const RatMatrix& f : realizations) {
    const Matroid m = Matroid::from_matrix(f);
    const Partition rho = whitney::rank_partition(m);
    const auto chi = whitney::u_module_character(m);
    for (const Partition& lam : whitney::partitions_of(m.n())) {
      const bool appears = whitney::multiplicity_from_character(chi, lam) > 0;
      if (appears != whitney::dominance_leq(lam, rho)) {
        return {false, "appearance and dominance disagree"};
      }
      ++labels;
    }
  }
  std::ostringstream os;
  os << realizations.size() << " realizations, " << labels
     << " labels: appears iff dominated by rank partition";
  return {true, os.str()};
}

Outcome criterion8() {
  // Pairing route agreement on 500 seeded words and place monomials.
  std::uint64_t state = 2024;
  for (int trial = 0; trial < 500; ++trial) {
    const int len = 1 + static_cast<int>(whitney::next_random(state) % 5);
    std::vector<int> pool = {1, 2, 3, 4, 5, 6, 7, 8};
    Word w;
    for (int i = 0; i < len; ++i) {
      const std::size_t pick = whitney::next_random(state) % pool.size();
      w.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<long>(pick));
    }
    PlaceMonomial q;
    for (int i = 0; i < len; ++i) {
      q[1 + static_cast<int>(whitney::next_random(state) % 3)] += 1;
    }
    if (!(whitney::laplace_pair(w, q) == oracles::place_split_laplace(w, q))) {
      return {false, "pairing routes disagree"};
    }
  }

  // Coassociativity of the letter coproduct for all compositions up to
  // length-5 words: both nestings match the direct three-block slices.
  for (int len = 1; len <= 5; ++len) {
    Word w;
    for (int i = 1; i <= len; ++i) w.push_back(i);
    for (int a = 0; a <= len; ++a) {
      for (int b = 0; a + b <= len; ++b) {
        const int c = len - a - b;
        std::map<std::vector<Word>, int> direct;
        for (const auto& slice :
             whitney::coproduct_slice_letters(w, {a, b, c})) {
          direct[slice.blocks] += slice.sign;
        }
        std::map<std::vector<Word>, int> left;
        for (const auto& outer :
             whitney::coproduct_slice_letters(w, {a + b, c})) {
          for (const auto& inner :
               whitney::coproduct_slice_letters(outer.blocks[0], {a, b})) {
            left[{inner.blocks[0], inner.blocks[1], outer.blocks[1]}] +=
                outer.sign * inner.sign;
          }
        }
        std::map<std::vector<Word>, int> right;
        for (const auto& outer :
             whitney::coproduct_slice_letters(w, {a, b + c})) {
          for (const auto& inner :
               whitney::coproduct_slice_letters(outer.blocks[1], {b, c})) {
            right[{outer.blocks[0], inner.blocks[0], inner.blocks[1]}] +=
                outer.sign * inner.sign;
          }
        }
        if (direct != left || direct != right) {
          return {false, "coproduct fails coassociativity"};
        }
      }
    }
  }

  // Exterior product: associative, graded commutative, odd squares vanish.
  state = 4096;
  for (int trial = 0; trial < 100; ++trial) {
    auto monomial = [&state]() {
      Element e = Element::one();
      const int pairs = 1 + static_cast<int>(whitney::next_random(state) % 3);
      for (int i = 0; i < pairs; ++i) {
        e = whitney::ext_mul(
            e, Element::generator(
                   1 + static_cast<int>(whitney::next_random(state) % 6),
                   1 + static_cast<int>(whitney::next_random(state) % 3)));
      }
      return e;
    };
    const Element x = monomial();
    const Element y = monomial();
    const Element z = monomial();
    if (!(whitney::ext_mul(whitney::ext_mul(x, y), z) ==
          whitney::ext_mul(x, whitney::ext_mul(y, z)))) {
      return {false, "exterior product not associative"};
    }
    if (x.terms().empty() || y.terms().empty()) continue;
    const int dx = static_cast<int>(x.terms().begin()->first.size());
    const int dy = static_cast<int>(y.terms().begin()->first.size());
    Element yx = whitney::ext_mul(y, x);
    if (dx * dy % 2 == 1) yx *= Rat(-1);
    if (!(whitney::ext_mul(x, y) == yx)) {
      return {false, "exterior product not graded commutative"};
    }
    if (dx % 2 == 1 && !whitney::ext_mul(x, x).is_zero()) {
      return {false, "odd square nonzero"};
    }
  }

  // Divided powers: binomial products, and k-fold first powers.
  for (int j = 0; j <= 4; ++j) {
    for (int k = 0; k <= 4; ++k) {
      PlaceSum a{{PlaceMonomial{{1, j}}, Int(1)}};
      PlaceSum b{{PlaceMonomial{{1, k}}, Int(1)}};
      if (j == 0) a = PlaceSum{{PlaceMonomial{}, Int(1)}};
      if (k == 0) b = PlaceSum{{PlaceMonomial{}, Int(1)}};
      const PlaceSum product = whitney::dp_mul(a, b);
      PlaceMonomial expect;
      if (j + k > 0) expect[1] = j + k;
      if (product.size() != 1 ||
          product.at(expect) != whitney::binomial(j + k, k)) {
        return {false, "divided power product wrong"};
      }
    }
  }
  for (int k = 1; k <= 5; ++k) {
    PlaceSum power{{PlaceMonomial{}, Int(1)}};
    const PlaceSum single{{PlaceMonomial{{2, 1}}, Int(1)}};
    for (int i = 0; i < k; ++i) power = whitney::dp_mul(power, single);
    if (power.size() != 1 ||
        power.at(PlaceMonomial{{2, k}}) != whitney::factorial(k)) {
      return {false, "k-fold first power != k! times divided power"};
    }
  }

  // Odd-degree factor squares to zero while the factor itself is nonzero.
  const Tableau row123{{{1, 2, 3}}};
  const Element factor = whitney::tab_element(TabPair{row123, row123});
  const Tableau doubled{{{1, 2, 3}, {1, 2, 3}}};
  const Element square = whitney::tab_element(TabPair{doubled, doubled});
  if (factor.is_zero() || !square.is_zero()) {
    return {false, "degree-three square identity fails"};
  }
  return {true,
          "500 pairing routes, coproduct coassociativity, exterior and "
          "divided-power laws, zero square"};
}

Outcome criterion9() {
  // The hook-symmetrizer exchange identity. The expansion terms are the
  // symmetrizers of the relabeled tableaux, so the term for f carries the
  // corner of the relabeled hook: min(S) in general and e when f = min(S).
  // The companion annihilation holds for every corner choice.
  std::size_t identities = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i) {
        if (mask & (1 << i)) s.push_back(i + 1);
      }
      const GroupAlgebraElement cs = whitney::young_symmetrizer_hook(s, n);
      for (int e = 1; e <= n; ++e) {
        if (std::find(s.begin(), s.end(), e) != s.end()) continue;
        GroupAlgebraElement sum(n);
        for (int f : s) {
          std::vector<int> swapped;
          for (int x : s) {
            if (x != f) swapped.push_back(x);
          }
          swapped.push_back(e);
          std::sort(swapped.begin(), swapped.end());
          whitney::Permutation t = whitney::identity_perm(n);
          std::swap(t[e - 1], t[f - 1]);
          GroupAlgebraElement transposition(n);
          transposition.add_term(t, Rat(1));
          sum += whitney::ga_mul(whitney::young_symmetrizer_hook(
                                     swapped, n, f == s[0] ? e : s[0]),
                                 transposition);
        }
        if (!(cs == sum)) return {false, "exchange identity fails"};

        std::vector<int> larger = s;
        larger.push_back(e);
        std::sort(larger.begin(), larger.end());
        const GroupAlgebraElement killer = whitney::antisymmetrizer(larger, n);
        for (int corner : s) {
          if (!whitney::ga_mul(killer, whitney::young_symmetrizer_hook(
                                           s, n, corner))
                   .is_zero()) {
            return {false, "antisymmetrizer fails to annihilate"};
          }
        }
        ++identities;
      }
    }
  }
  std::ostringstream os;
  os << identities
     << " (S, e) instances: exchange identity and annihilation hold";
  return {true, os.str()};
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* name;
    double budget_seconds;  // 0 = no budget pinned
    Check check;
  };
  const std::vector<Entry> entries = {
      {1, "worked example: broken circuits, nbc sets, hook multiplicity", 60.0,
       criterion1},
      {2, "hook multiplicities equal nbc counts across the corpus", 600.0,
       criterion2},
      {3, "freedom matroid graded pieces are free on standard pairs", 600.0,
       criterion3},
      {4, "free algebra counts and straightening certificates", 0.0,
       criterion4},
      {5, "realization nonvanishing sweep at six boxes", 0.0, criterion5},
      {6, "independent-set partitions match dominance", 0.0, criterion6},
      {7, "irreducible appearance matches dominance", 0.0, criterion7},
      {8, "superalgebra property suite", 60.0, criterion8},
      {9, "group algebra exchange identity and annihilation", 0.0, criterion9},
  };

  bool all_ok = true;
  for (const Entry& entry : entries) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = entry.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (entry.budget_seconds > 0 && elapsed > entry.budget_seconds) {
      outcome.ok = false;
      outcome.detail += " [over budget of " +
                        std::to_string(entry.budget_seconds) + "s]";
    }
    all_ok = all_ok && outcome.ok;
    std::printf("[%s] %d: %s — %s (%.2fs)\n", outcome.ok ? "PASS" : "FAIL",
                entry.number, entry.name, outcome.detail.c_str(), elapsed);
    std::fflush(stdout);
  }
  std::printf("%s\n", all_ok ? "ACCEPTANCE: all criteria pass"
                             : "ACCEPTANCE: FAILURES PRESENT");
  return all_ok ? 0 : 1;
}
