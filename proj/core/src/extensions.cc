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

#include "parcoh/extensions.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "parcoh/errors.h"

namespace parcoh {

namespace {

void check_pair_shape(const TwistingPair& p) {
  if (p.t.size() != p.base.size()) {
    throw StructuralError("twisting pair has " + std::to_string(p.t.size()) +
                          " automorphisms for " + std::to_string(p.base.size()) +
                          " base elements");
  }
  for (const ElementMap& f : p.t) {
    if (f.size() != p.fiber.size()) throw StructuralError("t(g) has the wrong size");
    for (ElementId y : f) {
      if (y >= p.fiber.size()) throw StructuralError("t(g) value out of range");
    }
  }
  if (p.eta.size() != p.base.words(2).size()) {
    throw StructuralError("eta has " + std::to_string(p.eta.size()) + " values for " +
                          std::to_string(p.base.words(2).size()) + " base 2-simplices");
  }
  for (ElementId e : p.eta) {
    if (e >= p.fiber.size()) throw StructuralError("eta value out of range");
  }
}

bool is_automorphism(const PartialGroup& m, const ElementMap& f) {
  std::vector<bool> seen(m.size(), false);
  for (ElementId y : f) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return is_homomorphism(m, m, f) && is_homomorphism(m, m, inverse_map(f));
}

ElementId checked_product(const PartialGroup& m, ElementId a, ElementId b) {
  const ElementId p = m.product(a, b);
  if (p == kUndefined) {
    throw PreconditionError("fiber product (" + m.name(a) + "," + m.name(b) +
                            ") is undefined; the twisting pair is not valid");
  }
  return p;
}

}  // namespace

ElementId TwistingPair::eta_of(ElementId g, ElementId h) const {
  const Word w{g, h};
  return eta.at(base.index_of_checked(w));
}

TwistingPair trivial_twisting_pair(const PartialGroup& base, const PartialGroup& fiber) {
  return {base, fiber, std::vector<ElementMap>(base.size(), identity_map(fiber)),
          std::vector<ElementId>(base.words(2).size(), kUnit)};
}

std::string_view to_string(TwistingCondition condition) {
  switch (condition) {
    case TwistingCondition::kHomotopy: return "homotopy";
    case TwistingCondition::kUnit: return "unit";
    case TwistingCondition::kCocycle: return "cocycle";
  }
  return "unknown";
}

TwistingReport validate_twisting_pair(const TwistingPair& p) {
  check_pair_shape(p);
  const PartialGroup& h = p.base;
  const PartialGroup& m = p.fiber;
  TwistingReport report;
  auto fail = [&](TwistingCondition c, Word w, std::string detail) {
    report.violations.push_back({c, std::move(w), std::move(detail)});
  };

  for (ElementId g = 0; g < h.size(); ++g) {
    if (!is_automorphism(m, p.t[g])) {
      fail(TwistingCondition::kHomotopy, {g}, "t(" + h.name(g) + ") is not an automorphism");
    }
  }
  if (p.t[kUnit] != identity_map(m)) fail(TwistingCondition::kUnit, {kUnit}, "t(1) is not Id");
  for (ElementId g = 0; g < h.size(); ++g) {
    if (p.eta_of(g, kUnit) != kUnit || p.eta_of(kUnit, g) != kUnit) {
      fail(TwistingCondition::kUnit, {g, kUnit}, "eta(g,1) or eta(1,g) is not 1");
    }
  }

  std::vector<bool> in_normalizer(m.size(), false);
  for (const NormalizerEntry& e : normalizer(m)) in_normalizer[e.eta] = true;
  const std::vector<Word>& pairs = h.words(2);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const ElementId g = pairs[i][0];
    const ElementId k = pairs[i][1];
    const ElementId e = p.eta[i];
    if (!in_normalizer[e]) {
      fail(TwistingCondition::kHomotopy, pairs[i],
           "eta = " + m.name(e) + " is not in the normalizer");
      continue;
    }
    const CheckResult r =
        check_homotopy(m, m, compose(p.t[g], p.t[k]), p.t[h.product(g, k)], e);
    if (!r) {
      fail(TwistingCondition::kHomotopy, pairs[i],
           "no homotopy t(g)t(h) <- t(gh) at " + m.format_word(r.witness) + ": " + r.reason);
    }
  }

  if (h.max_degree() >= 3) {
    for (const Word& w : h.words(3)) {
      const ElementId g = w[0], a = w[1], b = w[2];
      const ElementId lhs =
          m.product(p.t[g][p.eta_of(a, b)], p.eta_of(g, h.product(a, b)));
      const ElementId rhs = m.product(p.eta_of(g, a), p.eta_of(h.product(g, a), b));
      if (lhs == kUndefined || rhs == kUndefined || lhs != rhs) {
        fail(TwistingCondition::kCocycle, w, "cocycle condition fails");
      }
    }
  }
  return report;
}

ElementId twisted_element(const TwistingPair& pair, ElementId x, ElementId g) {
  return static_cast<ElementId>(x * pair.base.size() + g);
}

ExtensionTable twisted_product(const TwistingPair& p, int max_degree) {
  const TwistingReport report = validate_twisting_pair(p);
  if (!report.ok()) {
    const TwistingViolation& v = report.violations.front();
    throw PreconditionError("twisting pair violates the " + std::string(to_string(v.condition)) +
                            " condition at " + p.base.format_word(v.witness) + ": " + v.detail);
  }
  const PartialGroup& h = p.base;
  const PartialGroup& m = p.fiber;
  const int limit = std::min(h.max_degree(), m.max_degree());
  const int top = max_degree == 0 ? limit : max_degree;
  if (top < 2 || top > limit) {
    throw TruncationError("twisted product degree " + std::to_string(top) +
                          " is outside 2.." + std::to_string(limit));
  }

  const std::size_t hs = h.size();
  const std::size_t n = m.size() * hs;
  auto id = [&](ElementId x, ElementId g) { return twisted_element(p, x, g); };
  std::vector<ElementMap> t_inv;
  for (const ElementMap& f : p.t) t_inv.push_back(inverse_map(f));

  PartialGroup::Data d;
  d.max_degree = top;
  d.names.resize(n);
  d.inverse.resize(n);
  for (ElementId x = 0; x < m.size(); ++x) {
    for (ElementId g = 0; g < hs; ++g) {
      const ElementId e = id(x, g);
      d.names[e] = e == kUnit ? "1" : "(" + m.name(x) + "," + h.name(g) + ")";
      const ElementId gi = h.inverse(g);
      const ElementId lead = m.inverse(p.eta_of(gi, g));
      d.inverse[e] = id(checked_product(m, lead, p.t[gi][m.inverse(x)]), gi);
    }
  }

  d.domain.resize(static_cast<std::size_t>(top) + 1);
  for (int k = 2; k <= top; ++k) {
    auto& level = d.domain[static_cast<std::size_t>(k)];
    for (const Word& gw : h.words(k)) {
      for (const Word& y : m.words(k)) {
        Word w(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
          ElementId x = y[i];
          for (std::size_t j = i; j-- > 0;) x = t_inv[gw[j]][x];
          w[i] = id(x, gw[i]);
        }
        level.push_back(std::move(w));
      }
    }
  }

  d.product.assign(n * n, kUndefined);
  for (ElementId a = 0; a < n; ++a) {
    const ElementId x = static_cast<ElementId>(a / hs), g = static_cast<ElementId>(a % hs);
    for (ElementId b = 0; b < n; ++b) {
      const ElementId z = static_cast<ElementId>(b / hs), k = static_cast<ElementId>(b % hs);
      const ElementId gk = h.product(g, k);
      const ElementId xz = m.product(x, p.t[g][z]);
      if (gk == kUndefined || xz == kUndefined) continue;
      d.product[a * n + b] = id(checked_product(m, xz, p.eta_of(g, k)), gk);
    }
  }

  ExtensionTable e{PartialGroup(std::move(d)), h, m, ElementMap(n), ElementMap(m.size())};
  for (ElementId a = 0; a < n; ++a) e.projection[a] = static_cast<ElementId>(a % hs);
  for (ElementId x = 0; x < m.size(); ++x) e.fiber_inclusion[x] = id(x, kUnit);
  return e;
}

CheckResult check_extension(const ExtensionTable& e) {
  if (CheckResult r = is_homomorphism(e.total, e.base, e.projection); !r) {
    r.reason = "projection: " + r.reason;
    return r;
  }
  if (CheckResult r = is_homomorphism(e.fiber, e.total, e.fiber_inclusion); !r) {
    r.reason = "fiber inclusion: " + r.reason;
    return r;
  }
  for (int n = 0; n <= e.total.max_degree(); ++n) {
    std::unordered_map<Word, std::size_t, WordHash> count;
    std::set<Word> over_unit;
    Word image;
    for (const Word& w : e.total.words(n)) {
      image.resize(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) image[i] = e.projection[w[i]];
      ++count[image];
      if (std::all_of(image.begin(), image.end(), [](ElementId g) { return g == kUnit; })) {
        over_unit.insert(w);
      }
    }
    const std::size_t expected = e.fiber.words(n).size();
    for (const Word& b : e.base.words(n)) {
      const auto it = count.find(b);
      const std::size_t got = it == count.end() ? 0 : it->second;
      if (got != expected) {
        return CheckResult::fail(b, "fiber over the base word has " + std::to_string(got) +
                                        " simplices, expected " + std::to_string(expected));
      }
    }
    std::set<Word> fiber_words;
    for (const Word& w : e.fiber.words(n)) {
      Word v(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) v[i] = e.fiber_inclusion[w[i]];
      fiber_words.insert(std::move(v));
    }
    if (fiber_words != over_unit) {
      return CheckResult::fail(Word(static_cast<std::size_t>(n), kUnit),
                               "fiber over the unit word is not the included fiber");
    }
  }
  return CheckResult::pass();
}

bool extension_equivalent(const ExtensionTable& a, const ExtensionTable& b,
                          const SearchOptions& options) {
  if (!(a.base == b.base) || !(a.fiber == b.fiber)) {
    throw StructuralError("extensions have different bases or fibers");
  }
  if (a.total.size() != b.total.size()) return false;
  ElementMap fiber_of(a.total.size(), kUndefined);
  for (ElementId x = 0; x < a.fiber_inclusion.size(); ++x) fiber_of[a.fiber_inclusion[x]] = x;
  bool found = false;
  for_each_isomorphism(
      a.total, b.total,
      [&](ElementId u, ElementId v) {
        if (a.projection[u] != b.projection[v]) return false;
        return fiber_of[u] == kUndefined ? true : v == b.fiber_inclusion[fiber_of[u]];
      },
      [&](const ElementMap&) {
        found = true;
        return false;
      },
      options);
  return found;
}

std::vector<OuterAction> enumerate_outer_actions(const PartialGroup& base,
                                                 const PartialGroup& fiber,
                                                 const SearchOptions& options) {
  if (base.size() % 2 == 0) throw StructuralError("base is not a free partial group");
  const std::size_t k = (base.size() - 1) / 2;
  const std::vector<std::string> gens(base.names().begin() + 1,
                                      base.names().begin() + 1 + static_cast<std::ptrdiff_t>(k));
  if (!(free_partial_group(gens, base.max_degree()) == base)) {
    throw StructuralError("base is not a free partial group in canonical element order");
  }

  const OuterClasses oc = outer_classes(fiber, options);
  std::vector<ElementMap> reps;
  for (const auto& cls : oc.classes) reps.push_back(oc.automorphisms[cls.front()]);

  std::vector<OuterAction> out;
  std::vector<std::size_t> choice(k, 0);
  while (true) {
    TwistingPair pair = trivial_twisting_pair(base, fiber);
    for (std::size_t i = 0; i < k; ++i) {
      pair.t[1 + i] = reps[choice[i]];
      pair.t[1 + k + i] = inverse_map(reps[choice[i]]);
    }
    out.push_back({choice, std::move(pair)});
    std::size_t pos = k;
    while (pos > 0 && ++choice[pos - 1] == reps.size()) choice[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

FreeExtensionCount count_free_extensions(std::size_t x_generators, std::size_t y_generators,
                                         const SearchOptions& options) {
  std::vector<std::string> xs, ys;
  for (std::size_t i = 1; i <= x_generators; ++i) xs.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= y_generators; ++i) ys.push_back("y" + std::to_string(i));
  const PartialGroup base = free_partial_group(xs);
  const PartialGroup fiber = free_partial_group(ys);

  FreeExtensionCount out;
  out.enumerated = enumerate_outer_actions(base, fiber, options).size();
  Integer per_generator = 1;
  for (std::size_t i = 1; i <= y_generators; ++i) per_generator *= 2 * i;
  out.formula = pow(per_generator, static_cast<unsigned>(x_generators));
  return out;
}

CenterModule center_module(const PartialGroup& base, const PartialGroup& fiber,
                           const std::vector<ElementMap>& t) {
  const std::vector<ElementId> elements = center(fiber);
  std::vector<std::vector<Integer>> coordinates;
  const std::size_t z = elements.size();
  std::map<ElementId, std::size_t> pos;
  for (std::size_t i = 0; i < z; ++i) pos[elements[i]] = i;

  // Z^z modulo e_a + e_b - e_ab and e_1.
  std::vector<std::vector<long long>> relations;
  for (std::size_t i = 0; i < z; ++i) {
    for (std::size_t j = 0; j < z; ++j) {
      std::vector<long long> r(z, 0);
      ++r[i];
      ++r[j];
      --r[pos.at(fiber.product(elements[i], elements[j]))];
      relations.push_back(std::move(r));
    }
  }
  relations.emplace_back(z, 0);
  relations.back()[pos.at(kUnit)] = 1;
  IntMatrix rel(z, relations.size());
  for (std::size_t c = 0; c < relations.size(); ++c) {
    for (std::size_t r = 0; r < z; ++r) rel(r, c) = relations[c][r];
  }
  const SnfResult s = snf(rel);
  const std::vector<Integer> diag = s.diagonal();
  std::vector<std::size_t> kept;
  std::vector<Integer> orders;
  for (std::size_t r = 0; r < z; ++r) {
    const Integer d = r < diag.size() ? diag[r] : Integer(0);
    if (d.is_zero()) throw StructuralError("center of the fiber is not finite");
    if (d != 1) {
      kept.push_back(r);
      orders.push_back(d);
    }
  }
  const FinAbGroup coeffs(orders);
  for (std::size_t i = 0; i < z; ++i) {
    std::vector<Integer> c;
    for (std::size_t r : kept) c.push_back(s.u(r, i));
    coeffs.reduce(c);
    coordinates.push_back(std::move(c));
  }

  std::vector<std::size_t> generator_element(kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) {
    std::vector<Integer> e(kept.size());
    e[j] = 1;
    coeffs.reduce(e);
    const auto it = std::find(coordinates.begin(), coordinates.end(), e);
    generator_element[j] = static_cast<std::size_t>(it - coordinates.begin());
  }

  std::vector<AbHom> phi;
  for (ElementId g = 0; g < base.size(); ++g) {
    IntMatrix mat(kept.size(), kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j) {
      const auto it = pos.find(t.at(g).at(elements[generator_element[j]]));
      if (it == pos.end()) {
        throw PreconditionError("t(" + base.name(g) + ") does not preserve the center");
      }
      for (std::size_t r = 0; r < kept.size(); ++r) mat(r, j) = coordinates[it->second][r];
    }
    phi.emplace_back(coeffs, coeffs, std::move(mat));
  }
  return {elements, std::move(coordinates), PGAction{base, coeffs, std::move(phi)}};
}

ExtensionClassification classify_extensions(const PartialGroup& base, const PartialGroup& fiber,
                                            const std::vector<ElementMap>& t,
                                            const SearchOptions& options) {
  if (base.max_degree() < 3) {
    throw TruncationError("classifying extensions needs a base of degree at least 3");
  }
  TwistingPair pair = trivial_twisting_pair(base, fiber);
  pair.t = t;
  check_pair_shape(pair);
  for (ElementId g = 0; g < base.size(); ++g) {
    if (!is_automorphism(fiber, t[g])) {
      throw PreconditionError("t(" + base.name(g) + ") is not an automorphism of the fiber");
    }
  }
  if (t[kUnit] != identity_map(fiber)) throw PreconditionError("t(1) is not the identity");

  ExtensionClassification out;
  out.h2 = cohomology_group(center_module(base, fiber, t).action, 2);

  const std::vector<Word>& pairs = base.words(2);
  const std::vector<NormalizerEntry> nz = normalizer(fiber);
  std::vector<std::vector<ElementId>> candidates(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const ElementId g = pairs[i][0], h = pairs[i][1];
    if (g == kUnit || h == kUnit) {
      candidates[i] = {kUnit};
      continue;
    }
    const ElementMap lhs = compose(t[g], t[h]);
    for (const NormalizerEntry& e : nz) {
      if (check_homotopy(fiber, fiber, lhs, t[base.product(g, h)], e.eta)) {
        candidates[i].push_back(e.eta);
      }
    }
    if (candidates[i].empty()) return out;
  }

  // Cocycle checks keyed by the last 2-simplex they depend on.
  struct Triple {
    ElementId g;
    std::size_t hk, g_hk, gh, gh_k;
  };
  std::vector<std::vector<Triple>> checks(pairs.size());
  for (const Word& w : base.words(3)) {
    const ElementId g = w[0], h = w[1], k = w[2];
    const Triple tr{g, base.index_of_checked(Word{h, k}),
                    base.index_of_checked(Word{g, base.product(h, k)}),
                    base.index_of_checked(Word{g, h}),
                    base.index_of_checked(Word{base.product(g, h), k})};
    checks[std::max({tr.hk, tr.g_hk, tr.gh, tr.gh_k})].push_back(tr);
  }

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == pairs.size()) {
      ++out.twisting_cochains;
      ExtensionTable e = twisted_product(pair, std::min(base.max_degree(), fiber.max_degree()));
      for (const ExtensionTable& r : out.representatives) {
        if (extension_equivalent(r, e, options)) return;
      }
      out.pairs.push_back(pair);
      out.representatives.push_back(std::move(e));
      return;
    }
    for (ElementId c : candidates[i]) {
      pair.eta[i] = c;
      bool ok = true;
      for (const Triple& tr : checks[i]) {
        const ElementId lhs = fiber.product(t[tr.g][pair.eta[tr.hk]], pair.eta[tr.g_hk]);
        const ElementId rhs = fiber.product(pair.eta[tr.gh], pair.eta[tr.gh_k]);
        if (lhs == kUndefined || lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (ok) rec(i + 1);
    }
    pair.eta[i] = kUnit;
  };
  rec(0);
  return out;
}

ExtensionClassification classify_group_extensions(const FiniteGroup& k, const FiniteGroup& h,
                                                  const std::vector<ElementMap>& alpha,
                                                  int max_degree, const SearchOptions& options) {
  const PartialGroup fiber = bar(k, max_degree);
  const PartialGroup base = bar(h, max_degree);
  std::vector<ElementMap> t(base.size(), identity_map(fiber));
  if (!alpha.empty()) {
    if (alpha.size() != base.size()) {
      throw StructuralError("outer action has " + std::to_string(alpha.size()) +
                            " entries for a base of " + std::to_string(base.size()));
    }
    const std::vector<NormalizerEntry> nz = normalizer(fiber);
    if (std::none_of(nz.begin(), nz.end(),
                     [&](const NormalizerEntry& e) { return e.conjugation == alpha[kUnit]; })) {
      throw StructuralError("outer action is not trivial on the unit");
    }
    for (ElementId g = 1; g < base.size(); ++g) t[g] = alpha[g];
  }
  return classify_extensions(base, fiber, t, options);
}

}  // namespace parcoh
