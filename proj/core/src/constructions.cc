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

#include "parcoh/constructions.h"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <utility>

#include "parcoh/errors.h"

namespace parcoh {

FiniteGroup::FiniteGroup(std::vector<std::string> names,
                         std::vector<std::vector<std::size_t>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (n == 0) throw StructuralError("a group needs at least one element");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n) {
    throw StructuralError("duplicate group element names");
  }
  if (table_.size() != n) throw StructuralError("multiplication table has wrong row count");
  for (const auto& row : table_) {
    if (row.size() != n) throw StructuralError("multiplication table has a ragged row");
    for (std::size_t x : row) {
      if (x >= n) throw StructuralError("multiplication table entry out of range");
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool is_unit = true;
    for (std::size_t x = 0; x < n && is_unit; ++x) {
      is_unit = table_[e][x] == x && table_[x][e] == x;
    }
    if (is_unit) {
      unit_ = e;
      found = true;
    }
  }
  if (!found) throw StructuralError("multiplication table has no unit");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw StructuralError("multiplication is not associative at (" + names_[a] +
                                ", " + names_[b] + ", " + names_[c] + ")");
        }
      }
    }
  }
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == unit_ && table_[b][a] == unit_) inverse_[a] = b;
    }
    if (inverse_[a] == n) throw StructuralError("element " + names_[a] + " has no inverse");
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({"1"}, {{0}}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw StructuralError("cyclic group of order 0");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::symmetric3() {
  using Perm = std::array<int, 3>;
  const std::vector<std::pair<std::string, Perm>> elems = {
      {"1", {0, 1, 2}},     {"(12)", {1, 0, 2}},  {"(13)", {2, 1, 0}},
      {"(23)", {0, 2, 1}},  {"(123)", {1, 2, 0}}, {"(132)", {2, 0, 1}}};
  std::vector<std::string> names;
  for (const auto& e : elems) names.push_back(e.first);
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      Perm c{};
      for (int x = 0; x < 3; ++x) c[x] = elems[a].second[elems[b].second[x]];
      for (std::size_t k = 0; k < 6; ++k) {
        if (elems[k].second == c) table[a][b] = k;
      }
    }
  }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t nb = b.order();
  const std::size_t n = a.order() * nb;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < nb; ++j) names.push_back("(" + a.names()[i] + "," + b.names()[j] + ")");
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      table[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  return FiniteGroup(std::move(names), std::move(table));
}

namespace {

void enumerate_words(std::size_t alphabet, std::size_t length,
                     const std::function<bool(const Word&)>& keep_prefix,
                     std::vector<Word>& out) {
  Word w;
  std::function<void()> rec = [&]() {
    if (w.size() == length) {
      out.push_back(w);
      return;
    }
    for (ElementId x = 0; x < alphabet; ++x) {
      w.push_back(x);
      if (keep_prefix(w)) rec();
      w.pop_back();
    }
  };
  rec();
}

}  // namespace

ElementId bar_element(const FiniteGroup& g, std::size_t g_index) {
  if (g_index == g.unit()) return kUnit;
  return static_cast<ElementId>(g_index < g.unit() ? g_index + 1 : g_index);
}

PartialGroup bar(const FiniteGroup& g, int max_degree) {
  const std::size_t n = g.order();
  std::vector<std::size_t> group_index(n);
  for (std::size_t i = 0; i < n; ++i) group_index[bar_element(g, i)] = i;

  PartialGroup::Data d;
  d.max_degree = max_degree;
  d.names.resize(n);
  d.inverse.resize(n);
  for (std::size_t id = 0; id < n; ++id) {
    d.names[id] = id == kUnit ? "1" : g.names()[group_index[id]];
    d.inverse[id] = bar_element(g, g.inverse(group_index[id]));
  }
  if (max_degree < 2) throw StructuralError("max_degree must be at least 2");
  d.domain.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int k = 2; k <= max_degree; ++k) {
    enumerate_words(n, static_cast<std::size_t>(k), [](const Word&) { return true; },
                    d.domain[static_cast<std::size_t>(k)]);
  }
  d.product.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      d.product[a * n + b] = bar_element(g, g.mul(group_index[a], group_index[b]));
    }
  }
  return PartialGroup(std::move(d));
}

PartialGroup free_partial_group(const std::vector<std::string>& generators, int max_degree) {
  const std::size_t k = generators.size();
  const std::size_t m = 1 + 2 * k;
  // Element ids: 1 + i is generator i, 1 + k + i its formal inverse.
  auto generator_of = [k](ElementId x) { return (x - 1) % k; };
  auto is_tilde = [k](ElementId x) { return x > k; };

  PartialGroup::Data d;
  d.max_degree = max_degree;
  d.names.push_back("1");
  for (const std::string& g : generators) d.names.push_back(g);
  for (const std::string& g : generators) d.names.push_back("~" + g);
  d.inverse.resize(m);
  d.inverse[0] = kUnit;
  for (std::size_t i = 0; i < k; ++i) {
    d.inverse[1 + i] = static_cast<ElementId>(1 + k + i);
    d.inverse[1 + k + i] = static_cast<ElementId>(1 + i);
  }

  // Unit-free reduction alternates between x and ~x for a single x.
  auto alternating = [&](const Word& w) {
    std::optional<ElementId> last;
    for (ElementId x : w) {
      if (x == kUnit) continue;
      if (last) {
        if (generator_of(x) != generator_of(*last) || is_tilde(x) == is_tilde(*last)) {
          return false;
        }
      }
      last = x;
    }
    return true;
  };
  if (max_degree < 2) throw StructuralError("max_degree must be at least 2");
  d.domain.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 2; n <= max_degree; ++n) {
    enumerate_words(m, static_cast<std::size_t>(n), alternating,
                    d.domain[static_cast<std::size_t>(n)]);
  }
  d.product.assign(m * m, kUndefined);
  for (const Word& w : d.domain[2]) {
    // Count x minus ~x.
    int balance = 0;
    std::optional<std::size_t> gen;
    for (ElementId x : w) {
      if (x == kUnit) continue;
      gen = generator_of(x);
      balance += is_tilde(x) ? -1 : 1;
    }
    ElementId p = kUnit;
    if (balance > 0) p = static_cast<ElementId>(1 + *gen);
    if (balance < 0) p = static_cast<ElementId>(1 + k + *gen);
    d.product[w[0] * m + w[1]] = p;
  }
  return PartialGroup(std::move(d));
}

PartialGroup product(const PartialGroup& a, const PartialGroup& b) {
  const std::size_t nb = b.size();
  const std::size_t n = a.size() * nb;
  const int top = std::min(a.max_degree(), b.max_degree());
  auto pair_id = [nb](ElementId x, ElementId y) {
    return static_cast<ElementId>(x * nb + y);
  };

  PartialGroup::Data d;
  d.max_degree = top;
  d.names.resize(n);
  d.inverse.resize(n);
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < nb; ++y) {
      const ElementId id = pair_id(x, y);
      d.names[id] = id == kUnit ? "1" : "(" + a.name(x) + "," + b.name(y) + ")";
      d.inverse[id] = pair_id(a.inverse(x), b.inverse(y));
    }
  }
  d.domain.resize(static_cast<std::size_t>(top) + 1);
  for (int k = 2; k <= top; ++k) {
    auto& level = d.domain[static_cast<std::size_t>(k)];
    for (const Word& u : a.words(k)) {
      for (const Word& v : b.words(k)) {
        Word w(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = pair_id(u[i], v[i]);
        level.push_back(std::move(w));
      }
    }
  }
  d.product.assign(n * n, kUndefined);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const ElementId p = a.product(static_cast<ElementId>(x / nb), static_cast<ElementId>(y / nb));
      const ElementId q = b.product(static_cast<ElementId>(x % nb), static_cast<ElementId>(y % nb));
      if (p != kUndefined && q != kUndefined) d.product[x * n + y] = pair_id(p, q);
    }
  }
  return PartialGroup(std::move(d));
}

}  // namespace parcoh
