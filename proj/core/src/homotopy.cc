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

#include "parcoh/homotopy.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "parcoh/errors.h"

namespace parcoh {

namespace {

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

ElementMap identity_map(const PartialGroup& table) {
  ElementMap id(table.size());
  std::iota(id.begin(), id.end(), ElementId{0});
  return id;
}

ElementMap compose(const ElementMap& outer, const ElementMap& inner) {
  ElementMap out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer.at(inner[i]);
  return out;
}

ElementMap inverse_map(const ElementMap& bijection) {
  ElementMap out(bijection.size(), kUndefined);
  for (std::size_t i = 0; i < bijection.size(); ++i) {
    if (bijection[i] >= out.size() || out[bijection[i]] != kUndefined) {
      throw PreconditionError("inverse_map of a non-bijective map");
    }
    out[bijection[i]] = static_cast<ElementId>(i);
  }
  return out;
}

CheckResult is_homomorphism(const PartialGroup& source, const PartialGroup& target,
                            const ElementMap& map) {
  if (map.size() != source.size()) {
    throw StructuralError("element map has " + std::to_string(map.size()) +
                          " entries for " + std::to_string(source.size()) + " elements");
  }
  for (ElementId y : map) {
    if (y >= target.size()) throw StructuralError("element map value out of range");
  }
  if (map[kUnit] != kUnit) return CheckResult::fail({kUnit}, "unit is not preserved");
  for (ElementId x = 0; x < source.size(); ++x) {
    if (map[source.inverse(x)] != target.inverse(map[x])) {
      return CheckResult::fail({x}, "inverses are not preserved");
    }
  }
  const int top = std::min(source.max_degree(), target.max_degree());
  Word image;
  for (int n = 2; n <= top; ++n) {
    for (const Word& w : source.words(n)) {
      image.resize(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) image[i] = map[w[i]];
      if (!target.contains(image)) {
        return CheckResult::fail(w, "image " + target.format_word(image) +
                                        " is not a domain word");
      }
      const std::optional<ElementId> p = fold(source, w);
      const std::optional<ElementId> q = fold(target, image);
      if (!p || !q || map[*p] != *q) {
        return CheckResult::fail(w, "product is not preserved");
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_homotopy(const PartialGroup& source, const PartialGroup& target,
                           const ElementMap& f, const ElementMap& g, ElementId eta) {
  if (f.size() != source.size() || g.size() != source.size()) {
    throw StructuralError("homotopy endpoints have the wrong number of entries");
  }
  if (eta >= target.size()) throw StructuralError("homotopy element out of range");
  const int top = std::min(source.max_degree(), target.max_degree() - 1);
  Word omega;
  for (int n = 0; n <= top; ++n) {
    for (const Word& w : source.words(n)) {
      std::optional<ElementId> common;
      for (std::size_t k = 0; k <= w.size(); ++k) {
        omega.clear();
        for (std::size_t i = 0; i < k; ++i) omega.push_back(f[w[i]]);
        omega.push_back(eta);
        for (std::size_t i = k; i < w.size(); ++i) omega.push_back(g[w[i]]);
        if (!target.contains(omega)) {
          return CheckResult::fail(w, "omega_" + std::to_string(k) + " = " +
                                          target.format_word(omega) +
                                          " is not a domain word");
        }
        const std::optional<ElementId> p = fold(target, omega);
        if (!p) return CheckResult::fail(w, "product of omega_" + std::to_string(k) + " undefined");
        if (common && *common != *p) {
          return CheckResult::fail(w, "products of omega_0 and omega_" + std::to_string(k) +
                                          " differ");
        }
        common = p;
      }
    }
  }
  return CheckResult::pass();
}

std::optional<ElementMap> conjugation_map(const PartialGroup& table, ElementId eta) {
  ElementMap c(table.size());
  for (ElementId x = 0; x < table.size(); ++x) {
    const ElementId left = table.product(eta, x);
    if (left == kUndefined) return std::nullopt;
    std::optional<ElementId> found;
    for (ElementId y = 0; y < table.size() && !found; ++y) {
      if (table.product(y, eta) == left) found = y;
    }
    if (!found) return std::nullopt;
    c[x] = *found;
  }
  return c;
}

std::vector<NormalizerEntry> normalizer(const PartialGroup& table) {
  const ElementMap id = identity_map(table);
  std::vector<NormalizerEntry> out;
  for (ElementId eta = 0; eta < table.size(); ++eta) {
    std::optional<ElementMap> c = conjugation_map(table, eta);
    if (!c) continue;
    if (!check_homotopy(table, table, *c, id, eta)) continue;
    if (!is_homomorphism(table, table, *c)) continue;
    out.push_back({eta, std::move(*c)});
  }
  std::vector<bool> member(table.size(), false);
  for (const NormalizerEntry& e : out) member[e.eta] = true;
  for (const NormalizerEntry& a : out) {
    if (!member[table.inverse(a.eta)]) {
      throw PreconditionError("normalizer is not closed under inverses; validate the table");
    }
    for (const NormalizerEntry& b : out) {
      const ElementId p = table.product(a.eta, b.eta);
      if (p == kUndefined || !member[p]) {
        throw PreconditionError("normalizer is not closed under products; validate the table");
      }
    }
  }
  return out;
}

std::vector<ElementId> center(const PartialGroup& table) {
  const ElementMap id = identity_map(table);
  std::vector<ElementId> out;
  for (const NormalizerEntry& e : normalizer(table)) {
    if (e.conjugation == id) out.push_back(e.eta);
  }
  for (ElementId a : out) {
    for (ElementId b : out) {
      if (table.product(a, b) != table.product(b, a)) {
        throw PreconditionError("center is not commutative; validate the table");
      }
    }
  }
  return out;
}

std::size_t default_search_bound() {
  if (const char* env = std::getenv("PARCOH_SEARCH_BOUND")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 12;
}

void for_each_isomorphism(const PartialGroup& a, const PartialGroup& b,
                          const std::function<bool(ElementId, ElementId)>& allowed,
                          const std::function<bool(const ElementMap&)>& visit,
                          const SearchOptions& options) {
  const std::size_t m = a.size();
  if (b.size() != m) return;
  const int top = std::min(a.max_degree(), b.max_degree());
  for (int n = 2; n <= top; ++n) {
    if (a.words(n).size() != b.words(n).size()) return;
  }

  std::vector<std::vector<ElementId>> candidates(m);
  std::size_t choices = 0;
  for (ElementId x = 0; x < m; ++x) {
    for (ElementId y = 0; y < m; ++y) {
      if ((x == kUnit) != (y == kUnit)) continue;
      if ((a.inverse(x) == x) != (b.inverse(y) == y)) continue;
      if (allowed(x, y)) candidates[x].push_back(y);
    }
    if (candidates[x].empty()) return;
    if (candidates[x].size() > 1) ++choices;
  }
  if (choices > options.max_elements) {
    throw SearchBoundError("isomorphism search has " + std::to_string(choices) +
                           " free elements, above the search bound " +
                           std::to_string(options.max_elements) +
                           " (set PARCOH_SEARCH_BOUND to raise it)");
  }

  ElementMap f(m, kUndefined);
  std::vector<bool> used(m, false);
  std::vector<ElementId> assigned;
  bool stop = false;

  // Domain membership and products among assigned elements agree.
  auto consistent = [&]() {
    for (ElementId p : assigned) {
      for (ElementId q : assigned) {
        const ElementId s = a.product(p, q);
        const ElementId t = b.product(f[p], f[q]);
        if ((s == kUndefined) != (t == kUndefined)) return false;
        if (s != kUndefined && f[s] != kUndefined && f[s] != t) return false;
      }
    }
    return true;
  };

  std::function<void(ElementId)> rec = [&](ElementId x) {
    if (stop) return;
    while (x < m && f[x] != kUndefined) ++x;
    if (x == m) {
      if (is_homomorphism(a, b, f) && is_homomorphism(b, a, inverse_map(f))) {
        if (!visit(f)) stop = true;
      }
      return;
    }
    const ElementId ix = a.inverse(x);
    for (ElementId y : candidates[x]) {
      if (stop) return;
      if (used[y]) continue;
      const ElementId iy = b.inverse(y);
      if (ix != x) {
        if (used[iy] || f[ix] != kUndefined || !allowed(ix, iy)) continue;
      }
      f[x] = y;
      used[y] = true;
      assigned.push_back(x);
      if (ix != x) {
        f[ix] = iy;
        used[iy] = true;
        assigned.push_back(ix);
      }
      if (consistent()) rec(x + 1);
      if (ix != x) {
        f[ix] = kUndefined;
        used[iy] = false;
        assigned.pop_back();
      }
      f[x] = kUndefined;
      used[y] = false;
      assigned.pop_back();
    }
  };
  rec(0);
}

std::optional<ElementMap> find_isomorphism(const PartialGroup& a, const PartialGroup& b,
                                           const SearchOptions& options) {
  std::optional<ElementMap> found;
  for_each_isomorphism(
      a, b, [](ElementId, ElementId) { return true; },
      [&](const ElementMap& f) {
        found = f;
        return false;
      },
      options);
  return found;
}

std::vector<ElementMap> automorphisms(const PartialGroup& table, const SearchOptions& options) {
  if (table.size() > options.max_elements) {
    throw SearchBoundError("automorphism search over " + std::to_string(table.size()) +
                           " elements exceeds the search bound " +
                           std::to_string(options.max_elements) +
                           " (set PARCOH_SEARCH_BOUND to raise it)");
  }
  std::vector<ElementMap> out;
  for_each_isomorphism(
      table, table, [](ElementId, ElementId) { return true; },
      [&](const ElementMap& f) {
        out.push_back(f);
        return true;
      },
      options);
  return out;
}

OuterClasses outer_classes(const PartialGroup& table, const SearchOptions& options) {
  OuterClasses out;
  out.automorphisms = automorphisms(table, options);
  out.normalizer = normalizer(table);
  out.center = center(table);

  std::map<ElementMap, std::size_t> index;
  for (std::size_t i = 0; i < out.automorphisms.size(); ++i) index[out.automorphisms[i]] = i;

  std::vector<std::size_t> parent(out.automorphisms.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < out.automorphisms.size(); ++i) {
    for (const NormalizerEntry& e : out.normalizer) {
      auto it = index.find(compose(e.conjugation, out.automorphisms[i]));
      if (it == index.end()) {
        throw PreconditionError("conjugation by " + table.name(e.eta) +
                                " is not an automorphism up to degree " +
                                std::to_string(table.max_degree()));
      }
      const std::size_t a = root(i);
      const std::size_t b = root(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  out.class_of.assign(out.automorphisms.size(), 0);
  std::map<std::size_t, std::size_t> class_index;
  for (std::size_t i = 0; i < out.automorphisms.size(); ++i) {
    const std::size_t r = root(i);
    auto [it, fresh] = class_index.emplace(r, out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(i);
    out.class_of[i] = it->second;
  }
  out.sequence_exact = out.automorphisms.size() * out.center.size() ==
                       out.normalizer.size() * out.classes.size();
  return out;
}

}  // namespace parcoh
