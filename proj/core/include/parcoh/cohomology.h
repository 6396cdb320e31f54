// Copyright 2026 The Parcoh Authors
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

#ifndef PARCOH_COHOMOLOGY_H_
#define PARCOH_COHOMOLOGY_H_

#include <cstddef>
#include <vector>

#include "parcoh/abelian.h"
#include "parcoh/homotopy.h"
#include "parcoh/partial_group.h"

namespace parcoh {

// A partial group acting on an abelian group: phi[x] is an automorphism of
// coeffs for every element x.
struct PGAction {
  PartialGroup table;
  FinAbGroup coeffs;
  std::vector<AbHom> phi;
};

// The action with phi(x) = Id for every x.
PGAction trivial_action(PartialGroup table, FinAbGroup coeffs);

// Checks phi(1) = Id, phi(inv x) = phi(x)^-1 and phi(xy) = phi(x) o phi(y)
// on D_2. The witness is the offending word.
CheckResult validate_action(const PGAction& action);

// A function D_n -> coeffs, stored as |D_n| consecutive coefficient vectors
// in the order of PartialGroup::words(n).
struct Cochain {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<Integer> values;

  std::size_t size() const { return rank == 0 ? 0 : values.size() / rank; }
  std::vector<Integer> at(std::size_t word) const;
  void set(std::size_t word, const std::vector<Integer>& value);
  bool is_zero() const;
};

Cochain zero_cochain(const PartialGroup& table, const FinAbGroup& coeffs, int n);

// a + sign * b, reduced in coeffs.
Cochain combine(const FinAbGroup& coeffs, const Cochain& a, const Cochain& b,
                int sign = 1);

// The coboundary C^{n-1} -> C^n as a homomorphism between direct sums of
// coeffs indexed by words. Requires 1 <= n <= N.
AbHom coboundary(const PGAction& action, int n);

// The coboundary of psi evaluated directly from the face formula.
Cochain apply_coboundary(const PGAction& action, const Cochain& psi);

// H^n of the action complex. Requires n + 1 <= N.
FinAbGroup cohomology_group(const PGAction& action, int n);

// True when psi vanishes on every word with a unit among its first `prefix`
// entries; prefix = degree means fully normalized.
bool is_normalized(const PGAction& action, const Cochain& psi, std::size_t prefix);
bool is_normalized(const PGAction& action, const Cochain& psi);

struct Normalization {
  Cochain normalized;
  // chi[i - 1] is the degree n-1 cochain removed at stage i.
  std::vector<Cochain> chi;
  // stages[i] is psi_i; stages[0] is the input.
  std::vector<Cochain> stages;
};

// Replaces psi by a cohomologous cochain vanishing on degenerate words, one
// degeneracy at a time. Requires d(psi) to vanish on degenerate words; when
// N > n this is checked up front and the offending word reported.
Normalization normalize_cocycle(const PGAction& action, const Cochain& psi);

// One abelian group with an automorphism per edge, composed contravariantly:
// A(xy) = A(y) o A(x).
struct LocalSystem {
  PartialGroup table;
  FinAbGroup coeffs;
  std::vector<AbHom> a;
};

LocalSystem local_system_from_action(const PGAction& action);
CheckResult validate_local_system(const LocalSystem& system);

// Indices into words(n) of the words without a unit entry.
std::vector<std::size_t> nondegenerate_indices(const PartialGroup& table, int n);

// Coboundary on normalized cochains, with bases the nondegenerate words.
AbHom local_coboundary(const LocalSystem& system, int n);

FinAbGroup local_cohomology_group(const LocalSystem& system, int n);

struct TheoryComparison {
  FinAbGroup action_theory;
  FinAbGroup local_theory;
  bool equal = false;
};

TheoryComparison compare_theories(const PGAction& action, int n);

}  // namespace parcoh

#endif  // PARCOH_COHOMOLOGY_H_
