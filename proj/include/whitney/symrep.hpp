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

#ifndef WHITNEY_SYMREP_HPP_
#define WHITNEY_SYMREP_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "whitney/linalg.hpp"
#include "whitney/matroid.hpp"
#include "whitney/tableaux.hpp"

namespace whitney {

// One-line notation: perm[i] is the image of i+1; values are 1-based.
using Permutation = std::vector<int>;

Permutation identity_perm(int n);
// Composition convention: compose(a, b) applies b first, then a.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
int perm_sign(const Permutation& p);

// Lehmer-code bijection between S_n and [0, n!).
std::size_t perm_index(const Permutation& p);
Permutation index_perm(std::size_t index, int n);

Partition cycle_type(const Permutation& p);
// Canonical representative with cycles on consecutive blocks.
Permutation cycle_type_representative(const Partition& type, int n);
Int conjugacy_class_size(const Partition& type);

// Element of the rational group algebra QS_n.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n) : n_(n) {}
  static GroupAlgebraElement unit(int n);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Permutation, Rat>& terms() const { return terms_; }
  Rat coefficient(const Permutation& p) const;
  void add_term(const Permutation& p, const Rat& coeff);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rat& scalar);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a -= b;
  }
  friend bool operator==(const GroupAlgebraElement& a,
                         const GroupAlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  std::map<Permutation, Rat> terms_;
};

// Convolution product under the compose() convention.
GroupAlgebraElement ga_mul(const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b);

struct HookShape {
  int k = 1;  // first part
  int n = 1;  // total boxes
  Partition partition() const;  // (k, 1^{n-k})
};

// b_D = sum over permutations of D (fixing the rest) with signs.
GroupAlgebraElement antisymmetrizer(const std::vector<int>& d, int n);

// Young symmetrizer of the hook tableau with the elements of B in its first
// row and the rest down the first column: the SIGNED sum over the row group
// Sym(B) times the unsigned sum over the column group, in that order. The
// corner cell is shared between the row and the column, so the column group
// is Sym({corner} u complement); corner = 0 selects min(B). Relabeling the
// tableau by a permutation conjugates the symmetrizer and moves the corner
// with it, which is why the corner is exposed.
GroupAlgebraElement young_symmetrizer_hook(const std::vector<int>& b, int n,
                                           int corner = 0);

struct RightIdealBasis {
  std::size_t dim = 0;
  RatMatrix basis;  // echelon rows, coordinates indexed by perm_index
};

// Span of {g * sigma} over all generators g and sigma in S_n.
RightIdealBasis right_ideal_basis(const std::vector<GroupAlgebraElement>& gens,
                                  int n);
std::size_t right_ideal_dim(const std::vector<GroupAlgebraElement>& gens,
                            int n);

// Class function on S_n, one value per cycle type.
struct ClassFunction {
  int n = 0;
  std::map<Partition, Rat> values;
};

// Character of U(M) = QS_n / (right ideal of circuit antisymmetrizers),
// computed on the orthogonal complement of the ideal under the standard
// coefficient pairing (an S_n-invariant positive-definite form, so the
// complement is an isomorphic right module). n is capped; raise deliberately.
ClassFunction u_module_character(const Matroid& m, int n_cap = 7);

// Irreducible character value, standard labeling, by the
// Murnaghan-Nakayama border-strip recursion.
Int mn_character(const Partition& lam, const Partition& type);

// Dimension count of standard-label irreducibles via hook lengths.
Int hook_length_dimension(const Partition& lam);

// Multiplicity of the irreducible labeled lam in U(M). Multiplicity labels
// are the conjugates of the standard shapes: the all-ones label names the
// trivial representation, and a hook label (k, 1^{n-k}) pairs with the nbc
// count at k.
long multiplicity(const Matroid& m, const Partition& lam, int n_cap = 7);

// All multiplicities at once (one character computation).
std::map<Partition, long> multiplicity_table(const Matroid& m, int n_cap = 7);
long multiplicity_from_character(const ClassFunction& chi,
                                 const Partition& lam);

// |nbc_sets(m, k, must_contain_1 = true)|.
long hook_multiplicity_nbc(const Matroid& m, int k);

bool appears(const Matroid& m, const Partition& lam, int n_cap = 7);

}  // namespace whitney

#endif  // WHITNEY_SYMREP_HPP_
