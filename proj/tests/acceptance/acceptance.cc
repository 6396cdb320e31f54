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

// Runs the nine acceptance checks and prints one PASS/FAIL line for each.
// All comparisons are exact.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "corpus.h"
#include "oracles.h"
#include "parcoh/cohomology.h"
#include "parcoh/constructions.h"
#include "parcoh/extensions.h"
#include "parcoh/homotopy.h"

namespace {

using namespace parcoh;
using testing::Histogram;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

const std::vector<testing::ActionInstance>& corpus() {
  static const auto c = testing::action_corpus();
  return c;
}

Outcome cochain_complex_law() {
  std::size_t checks = 0;
  for (const auto& inst : corpus()) {
    const int top = inst.action.table.max_degree();
    for (int n = 1; n < top; ++n) {
      if (!testing::composite_is_zero(coboundary(inst.action, n + 1), coboundary(inst.action, n))) {
        return fail(inst.name + " at degree " + std::to_string(n));
      }
      ++checks;
    }
  }
  if (corpus().size() < 200) return fail("corpus has only " + std::to_string(corpus().size()));
  return {true, std::to_string(corpus().size()) + " instances, " + std::to_string(checks) +
                    " composites"};
}

Outcome classical_recovery() {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const PGAction a = trivial_action(bar(z2), FinAbGroup::cyclic(2));
  const Histogram want{{1, 1}, {2, 1}};
  for (int n = 1; n <= 3; ++n) {
    const FinAbGroup h = cohomology_group(a, n);
    if (h.to_string() != "Z/2") return fail("SNF gives " + h.to_string() + " at n=" + std::to_string(n));
    const auto brute = testing::brute_force_group_cohomology(z2, 2, {1, 1}, n);
    if (!brute || brute->quotient != want) return fail("enumeration disagrees at n=" + std::to_string(n));
  }
  return {true, "H^1..3 = Z/2 by SNF and by enumeration"};
}

Outcome theory_coincidence() {
  std::size_t checks = 0;
  for (const auto& inst : corpus()) {
    for (int n = 1; n <= 3; ++n) {
      const TheoryComparison c = compare_theories(inst.action, n);
      if (!c.equal) {
        return fail(inst.name + " n=" + std::to_string(n) + ": " + c.action_theory.to_string() +
                    " vs " + c.local_theory.to_string());
      }
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " comparisons"};
}

Outcome normalization_lemma() {
  testing::Rng rng(29);
  std::size_t checked = 0;
  for (const auto& inst : corpus()) {
    const PGAction& a = inst.action;
    for (int n = 1; n <= 3; ++n) {
      if (a.table.words(n + 1).size() > 400) continue;
      const Cochain psi = testing::random_cocycle(a, n, rng);
      const Normalization r = normalize_cocycle(a, psi);
      const std::string where = inst.name + " n=" + std::to_string(n);
      if (!apply_coboundary(a, r.normalized).is_zero()) return fail(where + ": not a cocycle");
      if (!is_normalized(a, r.normalized)) return fail(where + ": not normalized");
      for (std::size_t i = 0; i < r.stages.size(); ++i) {
        if (!is_normalized(a, r.stages[i], i)) return fail(where + ": stage " + std::to_string(i));
      }
      Cochain sum = zero_cochain(a.table, a.coeffs, n - 1);
      for (const Cochain& c : r.chi) sum = combine(a.coeffs, sum, c);
      if (combine(a.coeffs, psi, r.normalized, -1).values != apply_coboundary(a, sum).values) {
        return fail(where + ": difference is not the coboundary of the chi sum");
      }
      ++checked;
    }
  }
  if (checked < 100) return fail("only " + std::to_string(checked) + " cocycles");
  return {true, std::to_string(checked) + " cocycles"};
}

Outcome free_extension_count() {
  const std::vector<std::array<std::size_t, 3>> cases = {
      {0, 1, 1}, {1, 1, 2}, {1, 2, 8}, {2, 1, 4}, {1, 3, 48}, {2, 2, 64}};
  std::string seen;
  for (const auto& [x, y, want] : cases) {
    const FreeExtensionCount c = count_free_extensions(x, y);
    if (c.enumerated != want || c.formula != want) {
      return fail("(" + std::to_string(x) + "," + std::to_string(y) + "): enumerated " +
                  c.enumerated.str() + ", formula " + c.formula.str());
    }
    seen += (seen.empty() ? "" : " ") + c.enumerated.str();
  }
  return {true, seen};
}

Outcome automorphism_structure() {
  std::string seen;
  std::size_t want = 1;
  for (std::size_t n = 1; n <= 3; ++n) {
    want *= 2 * n;
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back("y" + std::to_string(i + 1));
    const std::size_t got = automorphisms(free_partial_group(gens)).size();
    if (got != want) return fail(std::to_string(n) + " generators: " + std::to_string(got));
    seen += (seen.empty() ? "" : " ") + std::to_string(got);
  }
  return {true, seen};
}

Outcome normalizer_center_laws() {
  const std::vector<std::pair<std::string, FiniteGroup>> groups = {
      {"Z/2", FiniteGroup::cyclic(2)},
      {"Z/4", FiniteGroup::cyclic(4)},
      {"Z/2xZ/2", testing::klein_four()},
      {"S3", FiniteGroup::symmetric3()}};
  for (const auto& [name, g] : groups) {
    const PartialGroup t = bar(g);
    if (normalizer(t).size() != g.order()) return fail("N(bar " + name + ")");
    std::vector<ElementId> want;
    for (std::size_t z : testing::group_center(g)) want.push_back(bar_element(g, z));
    std::sort(want.begin(), want.end());
    if (center(t) != want) return fail("Z(bar " + name + ")");
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back("y" + std::to_string(i + 1));
    const PartialGroup t = free_partial_group(gens);
    if (normalizer(t).size() != 1 || center(t).size() != 1) {
      return fail("free on " + std::to_string(n) + " generators");
    }
  }
  const auto tables = testing::table_corpus();
  for (const auto& nt : tables) {
    const OuterClasses oc = outer_classes(nt.table);
    if (!oc.sequence_exact ||
        oc.automorphisms.size() * oc.center.size() != oc.normalizer.size() * oc.classes.size()) {
      return fail("exactness on " + nt.name);
    }
  }
  return {true, "4 bars, 4 free, exactness on " + std::to_string(tables.size()) + " tables"};
}

Outcome structure_theorem() {
  const auto pairs = testing::twisting_pair_corpus();
  std::size_t built = 0;
  for (const auto& np : pairs) {
    if (!validate_twisting_pair(np.pair).ok()) return fail(np.name + " is not a twisting pair");
    const ExtensionTable e = twisted_product(np.pair);
    if (!validate(e.total).ok()) return fail(np.name + ": total fails validation");
    if (const CheckResult r = check_extension(e); !r) return fail(np.name + ": " + r.reason);
    const TwistingPair trivial = trivial_twisting_pair(np.pair.base, np.pair.fiber);
    if (!(twisted_product(trivial).total == product(np.pair.fiber, np.pair.base))) {
      return fail(np.name + ": trivial pair is not the product");
    }
    ++built;
  }
  return {true, std::to_string(built) + " twisting pairs"};
}

Outcome torsor() {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const ExtensionClassification a = classify_group_extensions(z2, z2, {});
  const auto brute_a = testing::brute_force_group_cohomology(z2, 2, {1, 1}, 2);
  if (!brute_a || brute_a->quotient != Histogram{{1, 1}, {2, 1}}) return fail("H^2(Z/2; Z/2) oracle");
  if (a.representatives.size() != 2) {
    return fail(std::to_string(a.representatives.size()) + " classes for Z/2 by Z/2");
  }
  const PartialGroup z4 = bar(FiniteGroup::cyclic(4), 3);
  const PartialGroup v4 = bar(testing::klein_four(), 3);
  bool has_z4 = false, has_v4 = false;
  for (const ExtensionTable& e : a.representatives) {
    has_z4 = has_z4 || find_isomorphism(e.total, z4).has_value();
    has_v4 = has_v4 || find_isomorphism(e.total, v4).has_value();
  }
  if (!has_z4 || !has_v4) return fail("Z/2 by Z/2 totals are not Z/4 and Z/2xZ/2");

  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const ElementMap inversion = testing::bar_map(z3, {0, 2, 1});
  const ExtensionClassification b =
      classify_group_extensions(z3, z2, {identity_map(bar(z3, 3)), inversion});
  const auto brute_b = testing::brute_force_group_cohomology(z2, 3, {1, 2}, 2);
  if (!brute_b || brute_b->quotient != Histogram{{1, 1}}) return fail("H^2(Z/2; Z/3 twisted) oracle");
  if (b.representatives.size() != 1) {
    return fail(std::to_string(b.representatives.size()) + " classes for Z/3 by Z/2");
  }
  if (!find_isomorphism(b.representatives[0].total, bar(FiniteGroup::symmetric3(), 3))) {
    return fail("Z/3 by Z/2 total is not S3");
  }
  return {true, "2 classes (Z/4, Z/2xZ/2) and 1 class (S3)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cochain complex law", cochain_complex_law},
      {"classical recovery", classical_recovery},
      {"theory coincidence", theory_coincidence},
      {"normalization", normalization_lemma},
      {"free extension count", free_extension_count},
      {"automorphism structure", automorphism_structure},
      {"normalizer and center", normalizer_center_laws},
      {"twisted product structure", structure_theorem},
      {"extension classes", torsor},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
