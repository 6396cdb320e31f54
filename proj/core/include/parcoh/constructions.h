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

// Builders for the standard partial groups: the bar construction of a finite
// group, the free partial group on a pointed set, and cartesian products.

#ifndef PARCOH_CONSTRUCTIONS_H_
#define PARCOH_CONSTRUCTIONS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "parcoh/partial_group.h"

namespace parcoh {

// A finite group given by its multiplication table. Construction checks
// closure, associativity, the unit and inverses and throws StructuralError.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> names,
              std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t unit() const { return unit_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  static FiniteGroup trivial();
  // Z/n with elements "0", ..., "n-1".
  static FiniteGroup cyclic(std::size_t n);
  // S_3 on permutations of {1,2,3} in cycle notation.
  static FiniteGroup symmetric3();
  // Pairs (a, b) named "(a,b)", a-major order.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> inverse_;
};

// Every word is composable. The group unit becomes element 0 named "1"; the
// other elements keep their relative order.
PartialGroup bar(const FiniteGroup& g, int max_degree = kDefaultMaxDegree);

// Element id of group element `g_index` inside bar(g).
ElementId bar_element(const FiniteGroup& g, std::size_t g_index);

// Elements 1, x..., ~x...; domain words are unit-padded alternating strings
// on a single generator.
PartialGroup free_partial_group(const std::vector<std::string>& generators,
                                int max_degree = kDefaultMaxDegree);

// Componentwise product; element (a_i, b_j) has id i * |b| + j and the
// truncation degree is the smaller of the two.
PartialGroup product(const PartialGroup& a, const PartialGroup& b);

}  // namespace parcoh

#endif  // PARCOH_CONSTRUCTIONS_H_
