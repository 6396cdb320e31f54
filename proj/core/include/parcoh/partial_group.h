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

// Finite partial groups truncated at a maximal word length.
//
// A PartialGroup stores its element set, the inversion, and the domain words
// of each length 2..N together with the binary product on length-2 words.
// Longer products are left folds of the binary product. The degree-n
// simplices of the associated simplicial set are exactly the domain words of
// length n, so a simplex and its spine are the same object here.

#ifndef PARCOH_PARTIAL_GROUP_H_
#define PARCOH_PARTIAL_GROUP_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace parcoh {

using ElementId = std::uint32_t;
using Word = std::vector<ElementId>;
using WordView = std::span<const ElementId>;

inline constexpr ElementId kUnit = 0;
inline constexpr ElementId kUndefined = static_cast<ElementId>(-1);
inline constexpr int kDefaultMaxDegree = 4;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (ElementId x : w) h = h * 1000003u ^ (x + 0x9e3779b9u + (h << 6) + (h >> 2));
    return h;
  }
};

class PartialGroup {
 public:
  // Raw table data. `domain[n]` lists the words of length n for
  // 2 <= n <= max_degree (entries for n < 2 are ignored; D_0 and D_1 are
  // implicit). `product` is a dense size x size table holding kUndefined
  // outside D_2.
  struct Data {
    std::vector<std::string> names;
    std::vector<ElementId> inverse;
    int max_degree = kDefaultMaxDegree;
    std::vector<std::vector<Word>> domain;
    std::vector<ElementId> product;
  };

  // Checks structure only (indices in range, inverse total, product defined
  // exactly on D_2, no duplicate words). Axioms are checked by validate().
  // Throws StructuralError.
  explicit PartialGroup(Data data);

  std::size_t size() const { return names_.size(); }
  int max_degree() const { return max_degree_; }

  const std::string& name(ElementId x) const { return names_.at(x); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElementId> find(std::string_view name) const;

  ElementId inverse(ElementId x) const { return inverse_[x]; }
  const std::vector<ElementId>& inverse_table() const { return inverse_; }
  // Binary product, kUndefined when (a, b) is not in D_2.
  ElementId product(ElementId a, ElementId b) const {
    return product_[static_cast<std::size_t>(a) * names_.size() + b];
  }
  const std::vector<ElementId>& product_table() const { return product_; }

  // Domain words of length n in lexicographic order; n <= max_degree.
  const std::vector<Word>& words(int n) const;
  bool contains(WordView w) const;
  // Position of w within words(w.size()).
  std::optional<std::size_t> index_of(WordView w) const;
  std::size_t index_of_checked(WordView w) const;

  // Left-fold product of a domain word; throws DomainError otherwise.
  ElementId pi(WordView w) const;

  std::string format_word(WordView w) const;

  bool operator==(const PartialGroup& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<ElementId> inverse_;
  int max_degree_;
  std::vector<ElementId> product_;
  std::vector<std::vector<Word>> levels_;
  std::vector<std::unordered_map<Word, std::size_t, WordHash>> index_;
};

// Degenerate iff some entry is the unit.
bool is_degenerate(WordView w);

struct Simplex {
  Word word;
  bool degenerate;
};

// D_n with degeneracy flags. Throws TruncationError for n > N.
std::vector<Simplex> simplices(const PartialGroup& table, int n);

ElementId pi(const PartialGroup& table, WordView w);

// d_i. d_0 drops the first entry, d_n the last, otherwise contracts
// (x_i, x_{i+1}).
Word face(const PartialGroup& table, WordView w, std::size_t i);

// s_i: inserts the unit after position i.
Word degeneracy(const PartialGroup& table, WordView w, std::size_t i);

// (x_n^-1, ..., x_1^-1).
Word invert_word(const PartialGroup& table, WordView w);

// Reversed domain words with the reversed binary product.
PartialGroup opposite(const PartialGroup& table);

enum class ViolationKind {
  kInversionNotInvolution,
  kUnitLaw,
  kInverseAxiom,
  kSubwordClosure,
  kContractionClosure,
  kContractionCoherence,
  kUnitInsertion,
  kInversionClosure,
  kCancellation,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Word witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Violations beyond this many per kind are counted but not stored.
  static constexpr std::size_t kWitnessesPerKind = 8;
  std::size_t suppressed = 0;

  bool ok() const { return violations.empty(); }
  void add(ViolationKind kind, Word witness, std::string detail);
};

// Checks every partial group axiom up to the truncation degree.
ValidationReport validate(const PartialGroup& table);

}  // namespace parcoh

#endif  // PARCOH_PARTIAL_GROUP_H_
