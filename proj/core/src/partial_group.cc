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

#include "parcoh/partial_group.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "parcoh/errors.h"

namespace parcoh {

namespace {

// Left fold through the binary product table; nullopt if it leaves D_2.
std::optional<ElementId> fold(const PartialGroup& t, WordView w) {
  if (w.empty()) return kUnit;
  ElementId acc = w[0];
  for (std::size_t i = 1; i < w.size(); ++i) {
    acc = t.product(acc, w[i]);
    if (acc == kUndefined) return std::nullopt;
  }
  return acc;
}

}  // namespace

PartialGroup::PartialGroup(Data data)
    : names_(std::move(data.names)),
      inverse_(std::move(data.inverse)),
      max_degree_(data.max_degree),
      product_(std::move(data.product)) {
  const std::size_t m = names_.size();
  if (m == 0) throw StructuralError("a partial group needs at least the unit");
  if (names_[0] != "1") {
    throw StructuralError("element 0 must be the unit named \"1\", got \"" +
                          names_[0] + "\"");
  }
  if (max_degree_ < 2) {
    throw StructuralError("max_degree must be at least 2, got " +
                          std::to_string(max_degree_));
  }
  std::set<std::string_view> seen;
  for (const std::string& n : names_) {
    if (n.empty()) throw StructuralError("empty element name");
    if (!seen.insert(n).second) throw StructuralError("duplicate element name \"" + n + "\"");
  }
  if (inverse_.size() != m) {
    throw StructuralError("inverse table has " + std::to_string(inverse_.size()) +
                          " entries for " + std::to_string(m) + " elements");
  }
  for (std::size_t x = 0; x < m; ++x) {
    if (inverse_[x] >= m) {
      throw StructuralError("inverse of \"" + names_[x] + "\" is out of range");
    }
  }
  if (product_.size() != m * m) {
    throw StructuralError("product table must have size^2 entries");
  }
  for (ElementId p : product_) {
    if (p != kUndefined && p >= m) throw StructuralError("product value out of range");
  }

  const auto degree = static_cast<std::size_t>(max_degree_);
  levels_.resize(degree + 1);
  index_.resize(degree + 1);
  levels_[0].push_back(Word{});
  for (ElementId x = 0; x < m; ++x) levels_[1].push_back(Word{x});
  for (std::size_t n = 2; n <= degree; ++n) {
    if (n < data.domain.size()) levels_[n] = std::move(data.domain[n]);
    for (const Word& w : levels_[n]) {
      if (w.size() != n) {
        throw StructuralError("domain word of length " + std::to_string(w.size()) +
                              " listed under degree " + std::to_string(n));
      }
      for (ElementId x : w) {
        if (x >= m) throw StructuralError("domain word entry out of range");
      }
    }
    std::sort(levels_[n].begin(), levels_[n].end());
    auto dup = std::adjacent_find(levels_[n].begin(), levels_[n].end());
    if (dup != levels_[n].end()) {
      throw StructuralError("duplicate domain word " + format_word(*dup));
    }
  }
  for (std::size_t n = 0; n <= degree; ++n) {
    index_[n].reserve(levels_[n].size());
    for (std::size_t i = 0; i < levels_[n].size(); ++i) index_[n].emplace(levels_[n][i], i);
  }
  // The product must be defined exactly on D_2.
  for (ElementId a = 0; a < m; ++a) {
    for (ElementId b = 0; b < m; ++b) {
      const bool defined = product(a, b) != kUndefined;
      const bool in_domain = index_[2].contains(Word{a, b});
      if (defined != in_domain) {
        throw StructuralError(
            std::string(in_domain ? "missing product for " : "product given outside D_2 for ") +
            format_word(Word{a, b}));
      }
    }
  }
}

std::optional<ElementId> PartialGroup::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<ElementId>(i);
  }
  return std::nullopt;
}

const std::vector<Word>& PartialGroup::words(int n) const {
  if (n < 0 || n > max_degree_) {
    throw TruncationError("degree " + std::to_string(n) +
                          " exceeds truncation degree " + std::to_string(max_degree_));
  }
  return levels_[static_cast<std::size_t>(n)];
}

bool PartialGroup::contains(WordView w) const { return index_of(w).has_value(); }

std::optional<std::size_t> PartialGroup::index_of(WordView w) const {
  if (w.size() > static_cast<std::size_t>(max_degree_)) return std::nullopt;
  if (w.size() == 1) {
    if (w[0] >= names_.size()) return std::nullopt;
    return w[0];
  }
  if (w.empty()) return 0;
  const auto& idx = index_[w.size()];
  auto it = idx.find(Word(w.begin(), w.end()));
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t PartialGroup::index_of_checked(WordView w) const {
  if (w.size() > static_cast<std::size_t>(max_degree_)) {
    throw TruncationError("word " + format_word(w) + " exceeds truncation degree " +
                          std::to_string(max_degree_));
  }
  std::optional<std::size_t> i = index_of(w);
  if (!i) throw DomainError("word " + format_word(w) + " is not in the domain");
  return *i;
}

ElementId PartialGroup::pi(WordView w) const {
  if (w.size() >= 2) index_of_checked(w);
  if (w.size() == 1 && w[0] >= names_.size()) {
    throw DomainError("element index out of range");
  }
  std::optional<ElementId> p = fold(*this, w);
  if (!p) throw DomainError("product of " + format_word(w) + " leaves the domain");
  return *p;
}

std::string PartialGroup::format_word(WordView w) const {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i] < names_.size() ? names_[w[i]] : "#" + std::to_string(w[i]);
  }
  return out + ")";
}

bool PartialGroup::operator==(const PartialGroup& other) const {
  return names_ == other.names_ && inverse_ == other.inverse_ &&
         max_degree_ == other.max_degree_ && product_ == other.product_ &&
         levels_ == other.levels_;
}

bool is_degenerate(WordView w) {
  return std::find(w.begin(), w.end(), kUnit) != w.end();
}

std::vector<Simplex> simplices(const PartialGroup& table, int n) {
  std::vector<Simplex> out;
  for (const Word& w : table.words(n)) out.push_back({w, is_degenerate(w)});
  return out;
}

ElementId pi(const PartialGroup& table, WordView w) { return table.pi(w); }

Word face(const PartialGroup& table, WordView w, std::size_t i) {
  const std::size_t n = w.size();
  if (n == 0) throw std::out_of_range("face of the empty word");
  if (i > n) {
    throw std::out_of_range("face index " + std::to_string(i) + " out of range for degree " +
                            std::to_string(n));
  }
  table.index_of_checked(w);
  Word out;
  out.reserve(n - 1);
  if (i == 0) {
    out.assign(w.begin() + 1, w.end());
  } else if (i == n) {
    out.assign(w.begin(), w.end() - 1);
  } else {
    out.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i) - 1);
    out.push_back(table.product(w[i - 1], w[i]));
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
  }
  return out;
}

Word degeneracy(const PartialGroup& table, WordView w, std::size_t i) {
  const std::size_t n = w.size();
  if (i > n) {
    throw std::out_of_range("degeneracy index " + std::to_string(i) +
                            " out of range for degree " + std::to_string(n));
  }
  if (n + 1 > static_cast<std::size_t>(table.max_degree())) {
    throw TruncationError("s_" + std::to_string(i) + " of a degree " + std::to_string(n) +
                          " simplex exceeds truncation degree " +
                          std::to_string(table.max_degree()));
  }
  table.index_of_checked(w);
  Word out(w.begin(), w.end());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), kUnit);
  return out;
}

Word invert_word(const PartialGroup& table, WordView w) {
  Word out(w.rbegin(), w.rend());
  for (ElementId& x : out) x = table.inverse(x);
  return out;
}

PartialGroup opposite(const PartialGroup& table) {
  PartialGroup::Data d;
  d.names = table.names();
  d.inverse = table.inverse_table();
  d.max_degree = table.max_degree();
  d.domain.resize(static_cast<std::size_t>(table.max_degree()) + 1);
  for (int n = 2; n <= table.max_degree(); ++n) {
    for (const Word& w : table.words(n)) d.domain[static_cast<std::size_t>(n)].emplace_back(w.rbegin(), w.rend());
  }
  const std::size_t m = table.size();
  d.product.resize(m * m);
  for (ElementId a = 0; a < m; ++a) {
    for (ElementId b = 0; b < m; ++b) d.product[a * m + b] = table.product(b, a);
  }
  return PartialGroup(std::move(d));
}

// ---------------------------------------------------------------------------
// Validation

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kInversionNotInvolution: return "inversion-not-involution";
    case ViolationKind::kUnitLaw: return "unit-law";
    case ViolationKind::kInverseAxiom: return "inverse-axiom";
    case ViolationKind::kSubwordClosure: return "subword-closure";
    case ViolationKind::kContractionClosure: return "contraction-closure";
    case ViolationKind::kContractionCoherence: return "contraction-coherence";
    case ViolationKind::kUnitInsertion: return "unit-insertion";
    case ViolationKind::kInversionClosure: return "inversion-closure";
    case ViolationKind::kCancellation: return "cancellation";
  }
  return "unknown";
}

void ValidationReport::add(ViolationKind kind, Word witness, std::string detail) {
  const auto same = std::count_if(violations.begin(), violations.end(),
                                  [&](const Violation& v) { return v.kind == kind; });
  if (static_cast<std::size_t>(same) >= kWitnessesPerKind) {
    ++suppressed;
    return;
  }
  violations.push_back({kind, std::move(witness), std::move(detail)});
}

ValidationReport validate(const PartialGroup& t) {
  ValidationReport report;
  const auto m = static_cast<ElementId>(t.size());
  const int top = t.max_degree();

  for (ElementId x = 0; x < m; ++x) {
    if (t.inverse(t.inverse(x)) != x) {
      report.add(ViolationKind::kInversionNotInvolution, {x}, "inv(inv(x)) != x");
    }
  }
  if (t.inverse(kUnit) != kUnit) {
    report.add(ViolationKind::kInversionNotInvolution, {kUnit}, "inv(1) != 1");
  }

  for (ElementId x = 0; x < m; ++x) {
    if (t.product(kUnit, x) != x) {
      report.add(ViolationKind::kUnitLaw, {kUnit, x}, "1 * x != x or (1, x) not in D_2");
    }
    if (t.product(x, kUnit) != x) {
      report.add(ViolationKind::kUnitLaw, {x, kUnit}, "x * 1 != x or (x, 1) not in D_2");
    }
    if (t.product(t.inverse(x), x) != kUnit) {
      report.add(ViolationKind::kInverseAxiom, {t.inverse(x), x},
                 "(x^-1, x) must lie in D_2 with product 1");
    }
  }

  for (int n = 3; n <= top; ++n) {
    for (const Word& w : t.words(n)) {
      const WordView v(w);
      if (!t.contains(v.subspan(1)) || !t.contains(v.first(w.size() - 1))) {
        report.add(ViolationKind::kSubwordClosure, w, "a maximal proper subword is missing");
      }
      const std::optional<ElementId> whole = fold(t, w);
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const ElementId p = t.product(w[i], w[i + 1]);
        if (p == kUndefined) {
          report.add(ViolationKind::kContractionClosure, w,
                     "adjacent pair at position " + std::to_string(i + 1) + " not in D_2");
          continue;
        }
        Word c(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        c.push_back(p);
        c.insert(c.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        if (!t.contains(c)) {
          report.add(ViolationKind::kContractionClosure, w,
                     "contraction at position " + std::to_string(i + 1) + " gives " +
                         t.format_word(c) + " outside the domain");
          continue;
        }
        const std::optional<ElementId> part = fold(t, c);
        if (!whole || !part || *whole != *part) {
          report.add(ViolationKind::kContractionCoherence, w,
                     "product changes under contraction at position " + std::to_string(i + 1));
        }
      }
    }
  }

  for (int n = 0; n < top; ++n) {
    for (const Word& w : t.words(n)) {
      const std::optional<ElementId> base = fold(t, w);
      for (std::size_t i = 0; i <= w.size(); ++i) {
        Word s = w;
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), kUnit);
        if (!t.contains(s)) {
          report.add(ViolationKind::kUnitInsertion, w,
                     "inserting 1 at position " + std::to_string(i) + " leaves the domain");
        } else if (fold(t, s) != base) {
          report.add(ViolationKind::kUnitInsertion, w,
                     "inserting 1 at position " + std::to_string(i) + " changes the product");
        }
      }
    }
  }

  for (int n = 1; 2 * n <= top; ++n) {
    for (const Word& w : t.words(n)) {
      Word u = invert_word(t, w);
      u.insert(u.end(), w.begin(), w.end());
      if (!t.contains(u)) {
        report.add(ViolationKind::kInversionClosure, w, "u^-1 o u is not in the domain");
      } else if (fold(t, u) != kUnit) {
        report.add(ViolationKind::kInversionClosure, w, "product of u^-1 o u is not 1");
      }
    }
  }

  for (ElementId a = 0; a < m; ++a) {
    std::map<ElementId, ElementId> right;  // a*b -> b
    std::map<ElementId, ElementId> left;   // b*a -> b
    for (ElementId b = 0; b < m; ++b) {
      if (ElementId p = t.product(a, b); p != kUndefined) {
        auto [it, fresh] = right.emplace(p, b);
        if (!fresh) {
          report.add(ViolationKind::kCancellation, {a, it->second, b},
                     "a*b == a*c with b != c");
        }
      }
      if (ElementId p = t.product(b, a); p != kUndefined) {
        auto [it, fresh] = left.emplace(p, b);
        if (!fresh) {
          report.add(ViolationKind::kCancellation, {it->second, b, a},
                     "b*a == c*a with b != c");
        }
      }
    }
  }
  return report;
}

}  // namespace parcoh
