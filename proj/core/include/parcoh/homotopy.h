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

// Homomorphisms, homotopies, normalizer and center, and brute-force
// automorphism groups of finite truncated partial groups.
//
// Every decision here is "up to the truncation degree": a map is a
// homomorphism if it preserves domain words and products of length <= N, and
// a homotopy is checked on source simplices whose homotopy words fit in the
// target's truncation.

#ifndef PARCOH_HOMOTOPY_H_
#define PARCOH_HOMOTOPY_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parcoh/partial_group.h"

namespace parcoh {

// A map on elements, indexed by source element id.
using ElementMap = std::vector<ElementId>;

// Pass/fail with the simplex that failed.
struct CheckResult {
  bool ok = true;
  Word witness;
  std::string reason;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(Word witness, std::string reason) {
    return {false, std::move(witness), std::move(reason)};
  }
};

ElementMap identity_map(const PartialGroup& table);
// outer o inner.
ElementMap compose(const ElementMap& outer, const ElementMap& inner);
// Inverse of a bijection.
ElementMap inverse_map(const ElementMap& bijection);

CheckResult is_homomorphism(const PartialGroup& source, const PartialGroup& target,
                            const ElementMap& map);

// Whether eta determines a homotopy f <-eta- g: for each simplex
// (x_1..x_n) of the source, every word (f x_1..f x_k, eta, g x_{k+1}..g x_n)
// is a target domain word and all of them have the same product.
CheckResult check_homotopy(const PartialGroup& source, const PartialGroup& target,
                           const ElementMap& f, const ElementMap& g, ElementId eta);

// The endomorphism x -> eta x eta^-1 read off from eta*x = c(x)*eta, or
// nullopt when some x has no solution.
std::optional<ElementMap> conjugation_map(const PartialGroup& table, ElementId eta);

struct NormalizerEntry {
  ElementId eta;
  ElementMap conjugation;
};

std::vector<NormalizerEntry> normalizer(const PartialGroup& table);
std::vector<ElementId> center(const PartialGroup& table);

// Element-count bound for brute-force searches: PARCOH_SEARCH_BOUND if set,
// otherwise 12.
std::size_t default_search_bound();

struct SearchOptions {
  std::size_t max_elements = default_search_bound();
};

// Visits isomorphisms a -> b with allowed(x, f(x)) for all x, in
// lexicographic order of the image sequence, until `visit` returns false.
// Refuses with SearchBoundError when more than max_elements elements have a
// choice of image.
void for_each_isomorphism(const PartialGroup& a, const PartialGroup& b,
                          const std::function<bool(ElementId, ElementId)>& allowed,
                          const std::function<bool(const ElementMap&)>& visit,
                          const SearchOptions& options = {});

std::optional<ElementMap> find_isomorphism(const PartialGroup& a, const PartialGroup& b,
                                           const SearchOptions& options = {});

// All automorphisms, identity first. Refuses above the element bound.
std::vector<ElementMap> automorphisms(const PartialGroup& table,
                                      const SearchOptions& options = {});

struct OuterClasses {
  std::vector<ElementMap> automorphisms;
  // Homotopy classes as indices into `automorphisms`, ordered by first member.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
  std::vector<NormalizerEntry> normalizer;
  std::vector<ElementId> center;
  // |Aut| * |Z| == |N| * |Out|.
  bool sequence_exact = false;
};

OuterClasses outer_classes(const PartialGroup& table, const SearchOptions& options = {});

}  // namespace parcoh

#endif  // PARCOH_HOMOTOPY_H_
