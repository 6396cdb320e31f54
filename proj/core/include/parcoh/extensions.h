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

#ifndef PARCOH_EXTENSIONS_H_
#define PARCOH_EXTENSIONS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "parcoh/abelian.h"
#include "parcoh/cohomology.h"
#include "parcoh/constructions.h"
#include "parcoh/homotopy.h"
#include "parcoh/partial_group.h"

namespace parcoh {

struct TwistingPair {
  PartialGroup base;
  PartialGroup fiber;
  std::vector<ElementMap> t;    // indexed by base element
  std::vector<ElementId> eta;   // indexed by base.words(2)

  ElementId eta_of(ElementId g, ElementId h) const;
};

TwistingPair trivial_twisting_pair(const PartialGroup& base, const PartialGroup& fiber);

enum class TwistingCondition { kHomotopy, kUnit, kCocycle };

std::string_view to_string(TwistingCondition condition);

struct TwistingViolation {
  TwistingCondition condition;
  Word witness;  // a base simplex
  std::string detail;
};

struct TwistingReport {
  std::vector<TwistingViolation> violations;
  bool ok() const { return violations.empty(); }
};

TwistingReport validate_twisting_pair(const TwistingPair& pair);

struct ExtensionTable {
  PartialGroup total;
  PartialGroup base;
  PartialGroup fiber;
  ElementMap projection;       // total -> base
  ElementMap fiber_inclusion;  // fiber -> total
};

// Element (x, g) of the total space has id x * |base| + g.
ElementId twisted_element(const TwistingPair& pair, ElementId x, ElementId g);

// max_degree 0 means the smaller truncation of base and fiber.
ExtensionTable twisted_product(const TwistingPair& pair, int max_degree = 0);

// Projection and inclusion are homomorphisms, and every base word has
// exactly |D_n(fiber)| preimages, the unit word's being the fiber itself.
CheckResult check_extension(const ExtensionTable& e);

bool extension_equivalent(const ExtensionTable& a, const ExtensionTable& b,
                          const SearchOptions& options = {});

struct OuterAction {
  std::vector<std::size_t> outer_class;  // class index per generator
  TwistingPair pair;
};

// All pointed maps from the generators of a free base into Out(fiber), each
// lifted to a multiplicative t with trivial eta.
std::vector<OuterAction> enumerate_outer_actions(const PartialGroup& base,
                                                 const PartialGroup& fiber,
                                                 const SearchOptions& options = {});

struct FreeExtensionCount {
  Integer enumerated;
  Integer formula;
};

FreeExtensionCount count_free_extensions(std::size_t x_generators, std::size_t y_generators,
                                         const SearchOptions& options = {});

// The center of `fiber` as an abelian group, acted on by base through t.
struct CenterModule {
  std::vector<ElementId> elements;
  std::vector<std::vector<Integer>> coordinates;  // per entry of elements
  PGAction action;
};

CenterModule center_module(const PartialGroup& base, const PartialGroup& fiber,
                           const std::vector<ElementMap>& t);

struct ExtensionClassification {
  std::vector<TwistingPair> pairs;
  std::vector<ExtensionTable> representatives;
  std::size_t twisting_cochains = 0;
  FinAbGroup h2;
};

// Fixes t, enumerates every eta making (t, eta) a twisting pair and keeps one
// representative per equivalence class.
ExtensionClassification classify_extensions(const PartialGroup& base, const PartialGroup& fiber,
                                            const std::vector<ElementMap>& t,
                                            const SearchOptions& options = {});

// alpha lists, per element of bar(h), an automorphism of bar(k) representing
// the outer action; empty means trivial.
ExtensionClassification classify_group_extensions(const FiniteGroup& k, const FiniteGroup& h,
                                                  const std::vector<ElementMap>& alpha,
                                                  int max_degree = 3,
                                                  const SearchOptions& options = {});

}  // namespace parcoh

#endif  // PARCOH_EXTENSIONS_H_
