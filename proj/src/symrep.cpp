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

#include "whitney/symrep.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "whitney/parallel.hpp"

namespace whitney {

namespace {

std::size_t factorial_size(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

void check_subset(const std::vector<int>& d, int n, const char* what) {
  std::vector<int> sorted = d;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > n) {
      throw std::invalid_argument(std::string(what) + ": element out of range");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw std::invalid_argument(std::string(what) + ": repeated element");
    }
  }
}

int arrangement_sign(const std::vector<int>& arr) {
  int sign = 1;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      if (arr[i] > arr[j]) sign = -sign;
    }
  }
  return sign;
}

// Sum over the permutations of d fixing everything else, with or without
// signs.
GroupAlgebraElement subgroup_sum(const std::vector<int>& d, int n,
                                 bool signed_sum) {
  check_subset(d, n, "subgroup_sum");
  std::vector<int> sorted = d;
  std::sort(sorted.begin(), sorted.end());
  GroupAlgebraElement out(n);
  std::vector<int> arr = sorted;
  do {
    Permutation p = identity_perm(n);
    for (std::size_t i = 0; i < sorted.size(); ++i) p[sorted[i] - 1] = arr[i];
    out.add_term(p, Rat(signed_sum ? arrangement_sign(arr) : 1));
  } while (std::next_permutation(arr.begin(), arr.end()));
  return out;
}

}  // namespace

Permutation identity_perm(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("compose: size mismatch");
  }
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i] - 1];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[p[i] - 1] = static_cast<int>(i) + 1;
  }
  return r;
}

int perm_sign(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i, len = 0;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<std::size_t>(p[j]) - 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::size_t perm_index(const Permutation& p) {
  const std::size_t n = p.size();
  std::size_t index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller_later = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p[j] < p[i]) ++smaller_later;
    }
    index = index * (n - i) + smaller_later;
  }
  return index;
}

Permutation index_perm(std::size_t index, int n) {
  std::vector<std::size_t> code(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    code[i] = index % static_cast<std::size_t>(n - i);
    index /= static_cast<std::size_t>(n - i);
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  Permutation p(n);
  for (int i = 0; i < n; ++i) {
    p[i] = pool[code[i]];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(code[i]));
  }
  return p;
}

Partition cycle_type(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  Partition type;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i;
    int len = 0;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<std::size_t>(p[j]) - 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

Permutation cycle_type_representative(const Partition& type, int n) {
  if (std::accumulate(type.begin(), type.end(), 0) != n) {
    throw std::invalid_argument("cycle type must sum to n");
  }
  Permutation p(n);
  int start = 1;
  for (int part : type) {
    for (int i = start; i < start + part - 1; ++i) p[i - 1] = i + 1;
    p[start + part - 2] = start;
    start += part;
  }
  return p;
}

Int conjugacy_class_size(const Partition& type) {
  const int n = std::accumulate(type.begin(), type.end(), 0);
  Int z = 1;
  int run_value = -1, run_length = 0;
  auto flush = [&] {
    for (int i = 1; i <= run_length; ++i) z *= Int(run_value) * Int(i);
  };
  for (int part : type) {
    if (part == run_value) {
      ++run_length;
    } else {
      flush();
      run_value = part;
      run_length = 1;
    }
  }
  flush();
  return factorial(n) / z;
}

GroupAlgebraElement GroupAlgebraElement::unit(int n) {
  GroupAlgebraElement e(n);
  e.add_term(identity_perm(n), Rat(1));
  return e;
}

Rat GroupAlgebraElement::coefficient(const Permutation& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rat(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rat& coeff) {
  if (static_cast<int>(p.size()) != n_) {
    throw std::invalid_argument("term size mismatch");
  }
  const auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(p, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(
    const GroupAlgebraElement& other) {
  if (n_ != other.n_) throw std::invalid_argument("mixed group algebras");
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(
    const GroupAlgebraElement& other) {
  if (n_ != other.n_) throw std::invalid_argument("mixed group algebras");
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mixed group algebras");
  GroupAlgebraElement out(a.n());
  for (const auto& [p, cp] : a.terms()) {
    for (const auto& [q, cq] : b.terms()) {
      out.add_term(compose(p, q), cp * cq);
    }
  }
  return out;
}

GroupAlgebraElement antisymmetrizer(const std::vector<int>& d, int n) {
  return subgroup_sum(d, n, true);
}

Partition HookShape::partition() const {
  if (k < 1 || k > n) throw std::invalid_argument("bad hook");
  Partition lam(static_cast<std::size_t>(n - k + 1), 1);
  lam[0] = k;
  return lam;
}

GroupAlgebraElement young_symmetrizer_hook(const std::vector<int>& b, int n,
                                           int corner) {
  check_subset(b, n, "young_symmetrizer_hook");
  if (b.empty()) throw std::invalid_argument("empty first row");
  std::vector<int> row = b;
  std::sort(row.begin(), row.end());
  if (corner == 0) corner = row.front();
  if (std::find(row.begin(), row.end(), corner) == row.end()) {
    throw std::invalid_argument("corner must lie in the first row");
  }
  std::vector<int> column{corner};
  for (int e = 1; e <= n; ++e) {
    if (std::find(row.begin(), row.end(), e) == row.end()) column.push_back(e);
  }
  return ga_mul(subgroup_sum(row, n, true), subgroup_sum(column, n, false));
}

RightIdealBasis right_ideal_basis(const std::vector<GroupAlgebraElement>& gens,
                                  int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("n out of range");
  const std::size_t order = factorial_size(n);
  RowEchelon echelon(order);
  for (std::size_t s = 0; s < order; ++s) {
    const Permutation sigma = index_perm(s, n);
    for (const GroupAlgebraElement& g : gens) {
      if (g.n() != n) throw std::invalid_argument("generator size mismatch");
      std::vector<Rat> row(order, Rat(0));
      for (const auto& [p, c] : g.terms()) row[perm_index(compose(p, sigma))] = c;
      echelon.insert(std::move(row));
    }
  }
  RightIdealBasis out;
  out.dim = echelon.rank();
  out.basis.rows = out.dim;
  out.basis.cols = order;
  out.basis.a = echelon.echelon_rows();
  return out;
}

std::size_t right_ideal_dim(const std::vector<GroupAlgebraElement>& gens,
                            int n) {
  return right_ideal_basis(gens, n).dim;
}

namespace {

// Kernel of left multiplication by every circuit antisymmetrizer, held as
// integer rows with a diagonal pivot pattern: rows[i][pivot[j]] is nonzero
// exactly when i == j. Coordinates of a span member v are then read off as
// v[pivot[i]] / rows[i][pivot[i]].
struct PivotCleanKernel {
  std::vector<std::vector<Int>> rows;  // each of length n!
  std::vector<std::size_t> pivots;
};

// Left cosets {tau sigma : tau in Sym(c)} partition S_n; the canonical
// representative is the member whose values inside c increase left to right.
bool is_coset_representative(const Permutation& sigma,
                             const std::vector<char>& in_circuit) {
  int last = 0;
  for (int value : sigma) {
    if (!in_circuit[static_cast<std::size_t>(value)]) continue;
    if (value < last) return false;
    last = value;
  }
  return true;
}

// The permutations of the subgroup Sym(circuit) with their signs.
std::vector<std::pair<Permutation, int>> subgroup_terms(
    const std::vector<int>& circuit, int n) {
  std::vector<std::pair<Permutation, int>> terms;
  std::vector<int> arr = circuit;
  do {
    Permutation p = identity_perm(n);
    for (std::size_t i = 0; i < circuit.size(); ++i) {
      p[circuit[i] - 1] = arr[i];
    }
    terms.emplace_back(std::move(p), arrangement_sign(arr));
  } while (std::next_permutation(arr.begin(), arr.end()));
  return terms;
}

std::vector<Int> primitive_scaled(const std::vector<Rat>& row) {
  Int denom_lcm = 1;
  for (const Rat& v : row) {
    const Int d = denominator(v);
    denom_lcm = lcm(denom_lcm, d);
  }
  std::vector<Int> out(row.size());
  Int content = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    out[i] = rational_to_int(row[i] * denom_lcm);
    content = gcd(content, out[i]);
  }
  if (content > 1) {
    for (Int& v : out) v /= content;
  }
  return out;
}

// v ⊥ b_C·sigma for all sigma collapses to one condition per left coset of
// Sym(C): sum over tau of sign(tau) v(tau sigma) = 0. The kernel therefore
// has the explicit basis {[tau sigma] - sign(tau)[sigma]} over cosets sigma
// and non-identity tau, already pivot clean at the tau sigma columns.
PivotCleanKernel first_circuit_kernel(const std::vector<int>& circuit, int n) {
  const std::size_t order = factorial_size(n);
  std::vector<char> in_circuit(static_cast<std::size_t>(n) + 1, 0);
  for (int e : circuit) in_circuit[static_cast<std::size_t>(e)] = 1;
  const auto terms = subgroup_terms(circuit, n);

  PivotCleanKernel kernel;
  for (std::size_t s = 0; s < order; ++s) {
    const Permutation sigma = index_perm(s, n);
    if (!is_coset_representative(sigma, in_circuit)) continue;
    for (const auto& [tau, sign] : terms) {
      const std::size_t moved = perm_index(compose(tau, sigma));
      if (moved == s) continue;  // tau == identity
      std::vector<Int> row(order, Int(0));
      row[moved] = 1;
      row[s] = -sign;
      kernel.rows.push_back(std::move(row));
      kernel.pivots.push_back(moved);
    }
  }
  return kernel;
}

// Restricts the kernel to vectors killed by the next circuit. The nullspace
// basis has the identity pattern on the free columns, so combining kernel
// rows through it lands on a new diagonal pivot pattern: row i of the result
// is pivoted at pivots[free_columns[i]].
void intersect_with_circuit(PivotCleanKernel& kernel,
                            const std::vector<int>& circuit, int n) {
  const std::size_t order = factorial_size(n);
  const std::size_t k = kernel.rows.size();
  if (k == 0) return;
  std::vector<char> in_circuit(static_cast<std::size_t>(n) + 1, 0);
  for (int e : circuit) in_circuit[static_cast<std::size_t>(e)] = 1;
  const auto terms = subgroup_terms(circuit, n);

  std::vector<std::vector<std::pair<std::size_t, int>>> conditions;
  for (std::size_t s = 0; s < order; ++s) {
    const Permutation sigma = index_perm(s, n);
    if (!is_coset_representative(sigma, in_circuit)) continue;
    std::vector<std::pair<std::size_t, int>> condition;
    condition.reserve(terms.size());
    for (const auto& [tau, sign] : terms) {
      condition.emplace_back(perm_index(compose(tau, sigma)), sign);
    }
    conditions.push_back(std::move(condition));
  }

  RatMatrix a = RatMatrix::zero(conditions.size(), k);
  bool all_zero = true;
  for (std::size_t r = 0; r < conditions.size(); ++r) {
    for (std::size_t j = 0; j < k; ++j) {
      Int value = 0;
      for (const auto& [col, sign] : conditions[r]) {
        if (sign > 0) {
          value += kernel.rows[j][col];
        } else {
          value -= kernel.rows[j][col];
        }
      }
      if (value != 0) {
        a.a[r][j] = Rat(value);
        all_zero = false;
      }
    }
  }
  if (all_zero) return;  // circuit conditions already hold on the kernel

  const NullspaceBasis nullspace = nullspace_tracked(a);
  std::vector<std::vector<Int>> new_rows;
  std::vector<std::size_t> new_pivots;
  for (std::size_t i = 0; i < nullspace.rows.size(); ++i) {
    const std::vector<Int> combo = primitive_scaled(nullspace.rows[i]);
    std::vector<Int> row(order, Int(0));
    for (std::size_t j = 0; j < k; ++j) {
      if (combo[j] == 0) continue;
      const std::vector<Int>& source = kernel.rows[j];
      for (std::size_t c = 0; c < order; ++c) {
        if (source[c] != 0) row[c] += combo[j] * source[c];
      }
    }
    new_pivots.push_back(kernel.pivots[nullspace.free_columns[i]]);
    new_rows.push_back(std::move(row));
  }
  kernel.rows = std::move(new_rows);
  kernel.pivots = std::move(new_pivots);
}

}  // namespace

ClassFunction u_module_character(const Matroid& m, int n_cap) {
  const int n = m.n();
  if (n < 1) throw std::invalid_argument("empty ground set");
  if (n > n_cap || n > 8) {
    throw std::invalid_argument("ground set exceeds the group algebra cap");
  }
  ClassFunction chi;
  chi.n = n;
  const std::vector<Partition> types = partitions_of(n);

  // No dependencies: the ideal is zero and U(M) is the regular module.
  if (m.circuits().empty()) {
    for (const Partition& type : types) {
      chi.values[type] = type.size() == static_cast<std::size_t>(n)
                             ? Rat(factorial(n))
                             : Rat(0);
    }
    return chi;
  }

  // Dependent sets factor through the circuits they contain (b_D picks up a
  // signed coset sum as a right factor), so circuit antisymmetrizers already
  // generate the ideal. Smallest circuits first: they cut the kernel most.
  std::vector<std::vector<int>> circuits = m.circuits();
  std::sort(circuits.begin(), circuits.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });

  PivotCleanKernel kernel = first_circuit_kernel(circuits[0], n);
  for (std::size_t i = 1; i < circuits.size() && !kernel.rows.empty(); ++i) {
    intersect_with_circuit(kernel, circuits[i], n);
  }

  // The coefficient pairing on QS_n is S_n-invariant and definite, so the
  // common kernel (the ideal's orthogonal complement) is a right module
  // isomorphic to the quotient by the ideal; its trace IS chi_U. Pivot
  // cleanliness turns each trace into k coordinate lookups.
  std::vector<Permutation> pivot_perms;
  pivot_perms.reserve(kernel.pivots.size());
  for (std::size_t p : kernel.pivots) pivot_perms.push_back(index_perm(p, n));

  // Classes are independent read-only jobs over the fixed kernel.
  std::vector<Rat> traces(types.size());
  parallel_for(types.size(), [&](std::size_t t) {
    const Permutation g_inverse =
        inverse(cycle_type_representative(types[t], n));
    Rat trace(0);
    for (std::size_t i = 0; i < kernel.rows.size(); ++i) {
      const std::size_t column = perm_index(compose(pivot_perms[i], g_inverse));
      const Int& numerator = kernel.rows[i][column];
      if (numerator != 0) {
        trace += Rat(numerator) / Rat(kernel.rows[i][kernel.pivots[i]]);
      }
    }
    if (denominator(trace) != 1) {
      throw std::logic_error("character value is not an integer");
    }
    traces[t] = std::move(trace);
  });
  for (std::size_t t = 0; t < types.size(); ++t) {
    chi.values[types[t]] = traces[t];
  }
  return chi;
}

namespace {

Int mn_rec(const Partition& lam, const Partition& type, std::size_t idx) {
  if (idx == type.size()) return 1;
  const int strip = type[idx];
  const std::size_t m = lam.size();
  std::vector<int> beta(m);
  for (std::size_t i = 0; i < m; ++i) {
    beta[i] = lam[i] + static_cast<int>(m - 1 - i);
  }
  Int total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const int lowered = beta[i] - strip;
    if (lowered < 0) continue;
    if (std::find(beta.begin(), beta.end(), lowered) != beta.end()) continue;
    int height = 0;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (beta[j] > lowered) ++height;
    }
    std::vector<int> next_beta = beta;
    next_beta[i] = lowered;
    std::sort(next_beta.begin(), next_beta.end(), std::greater<int>());
    Partition next;
    for (std::size_t j = 0; j < m; ++j) {
      const int part = next_beta[j] - static_cast<int>(m - 1 - j);
      if (part > 0) next.push_back(part);
    }
    const Int sub = mn_rec(next, type, idx + 1);
    total += height % 2 == 0 ? sub : -sub;
  }
  return total;
}

}  // namespace

Int mn_character(const Partition& lam, const Partition& type) {
  if (!is_partition(lam) || !is_partition(type)) {
    throw std::invalid_argument("labels must be partitions");
  }
  const int boxes = std::accumulate(lam.begin(), lam.end(), 0);
  const int moved = std::accumulate(type.begin(), type.end(), 0);
  if (boxes != moved) throw std::invalid_argument("size mismatch");
  if (boxes == 0) return 1;
  return mn_rec(lam, type, 0);
}

Int hook_length_dimension(const Partition& lam) {
  if (!is_partition(lam)) throw std::invalid_argument("not a partition");
  const int boxes = std::accumulate(lam.begin(), lam.end(), 0);
  const Partition conj = conjugate(lam);
  Int denom = 1;
  for (std::size_t r = 0; r < lam.size(); ++r) {
    for (int c = 0; c < lam[r]; ++c) {
      const int arm = lam[r] - c - 1;
      const int leg = conj[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
      denom *= Int(arm + leg + 1);
    }
  }
  return factorial(boxes) / denom;
}

long multiplicity_from_character(const ClassFunction& chi,
                                 const Partition& lam) {
  const int n = chi.n;
  if (std::accumulate(lam.begin(), lam.end(), 0) != n) {
    throw std::invalid_argument("label size mismatch");
  }
  const Partition standard_label = conjugate(lam);
  Rat total(0);
  for (const auto& [type, value] : chi.values) {
    total += Rat(conjugacy_class_size(type)) * value *
             Rat(mn_character(standard_label, type));
  }
  total /= Rat(factorial(n));
  if (denominator(total) != 1) {
    throw std::logic_error("multiplicity is not an integer");
  }
  const Int count = rational_to_int(total);
  if (count < 0) throw std::logic_error("negative multiplicity");
  return static_cast<long>(count);
}

long multiplicity(const Matroid& m, const Partition& lam, int n_cap) {
  return multiplicity_from_character(u_module_character(m, n_cap), lam);
}

std::map<Partition, long> multiplicity_table(const Matroid& m, int n_cap) {
  const ClassFunction chi = u_module_character(m, n_cap);
  std::map<Partition, long> table;
  for (const Partition& lam : partitions_of(m.n())) {
    table[lam] = multiplicity_from_character(chi, lam);
  }
  return table;
}

long hook_multiplicity_nbc(const Matroid& m, int k) {
  return static_cast<long>(nbc_sets(m, k, true).size());
}

bool appears(const Matroid& m, const Partition& lam, int n_cap) {
  return multiplicity(m, lam, n_cap) > 0;
}

}  // namespace whitney
