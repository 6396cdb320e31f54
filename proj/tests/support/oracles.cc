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

#include "oracles.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace parcoh::testing {

namespace {

using Values = std::vector<std::uint32_t>;

struct Complex {
  std::vector<std::vector<Word>> basis;  // by degree
  std::function<ElementId(ElementId, ElementId)> mul;
  std::vector<std::uint64_t> mult;
  std::uint64_t m = 0;
  std::vector<std::map<Word, std::size_t>> index;

  void build_index() {
    index.resize(basis.size());
    for (std::size_t d = 0; d < basis.size(); ++d) {
      for (std::size_t i = 0; i < basis[d].size(); ++i) index[d][basis[d][i]] = i;
    }
  }

  Word face(const Word& w, std::size_t i) const {
    Word out;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (i == 0 && j == 0) continue;
      if (i == w.size() && j + 1 == w.size()) continue;
      if (i > 0 && i < w.size() && j + 1 == i) {
        out.push_back(mul(w[j], w[j + 1]));
        ++j;
        continue;
      }
      out.push_back(w[j]);
    }
    return out;
  }

  // Coboundary of c, a cochain on basis[d - 1].
  Values delta(const Values& c, std::size_t d) const {
    Values out(basis[d].size());
    for (std::size_t k = 0; k < basis[d].size(); ++k) {
      const Word& w = basis[d][k];
      std::int64_t v = 0;
      for (std::size_t i = 0; i <= w.size(); ++i) {
        const auto it = index[d - 1].find(face(w, i));
        if (it == index[d - 1].end()) continue;
        const std::int64_t x = c[it->second];
        if (i == 0) {
          v += static_cast<std::int64_t>(mult[w[0]] % m) * x;
        } else {
          v += i % 2 ? -x : x;
        }
      }
      const std::int64_t mm = static_cast<std::int64_t>(m);
      out[k] = static_cast<std::uint32_t>(((v % mm) + mm) % mm);
    }
    return out;
  }
};

bool fits(std::uint64_t m, std::size_t count, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < count; ++i) {
    total *= m;
    if (total > limit) return false;
  }
  return true;
}

// Calls visit on every vector in (Z/m)^count.
void for_each_vector(std::uint64_t m, std::size_t count, const std::function<void(const Values&)>& visit) {
  Values v(count, 0);
  while (true) {
    visit(v);
    std::size_t i = 0;
    while (i < count && ++v[i] == m) v[i++] = 0;
    if (i == count) return;
  }
}

std::optional<BruteCohomology> run(const Complex& c, int n, std::uint64_t limit) {
  const std::size_t dn = static_cast<std::size_t>(n);
  if (!fits(c.m, c.basis[dn].size(), limit)) return std::nullopt;
  if (n > 0 && !fits(c.m, c.basis[dn - 1].size(), limit)) return std::nullopt;

  std::set<Values> boundaries;
  if (n == 0) {
    boundaries.insert(Values(c.basis[0].size(), 0));
  } else {
    for_each_vector(c.m, c.basis[dn - 1].size(),
                    [&](const Values& b) { boundaries.insert(c.delta(b, dn)); });
  }
  BruteCohomology out;
  out.coboundaries = boundaries.size();
  Histogram raw;
  for_each_vector(c.m, c.basis[dn].size(), [&](const Values& z) {
    const Values dz = c.delta(z, dn + 1);
    if (std::any_of(dz.begin(), dz.end(), [](std::uint32_t x) { return x != 0; })) return;
    ++out.cocycles;
    Values multiple = z;
    std::uint64_t order = 1;
    while (!boundaries.count(multiple)) {
      for (std::size_t i = 0; i < z.size(); ++i) {
        multiple[i] = static_cast<std::uint32_t>((multiple[i] + z[i]) % c.m);
      }
      ++order;
    }
    ++raw[order];
  });
  for (const auto& [order, count] : raw) out.quotient[order] = count / out.coboundaries;
  return out;
}

std::uint64_t element_order(std::size_t x, std::size_t unit,
                            const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  std::uint64_t k = 1;
  for (std::size_t p = x; p != unit; p = mul(p, x)) ++k;
  return k;
}

}  // namespace

Histogram order_histogram(const FinAbGroup& g) {
  std::vector<std::uint64_t> orders;
  for (const Integer& m : g.orders()) orders.push_back(static_cast<std::uint64_t>(m));
  Histogram h;
  std::vector<std::uint64_t> x(orders.size(), 0);
  while (true) {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < x.size(); ++i) o = std::lcm(o, orders[i] / std::gcd(x[i], orders[i]));
    ++h[o];
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == orders[i]) x[i++] = 0;
    if (i == x.size()) return h;
  }
}

Histogram order_histogram(const PartialGroup& t) {
  Histogram h;
  for (ElementId x = 0; x < t.size(); ++x) {
    ++h[element_order(x, kUnit, [&](std::size_t a, std::size_t b) {
      return static_cast<std::size_t>(t.product(static_cast<ElementId>(a), static_cast<ElementId>(b)));
    })];
  }
  return h;
}

Histogram order_histogram(const FiniteGroup& g) {
  Histogram h;
  for (std::size_t x = 0; x < g.order(); ++x) {
    ++h[element_order(x, g.unit(), [&](std::size_t a, std::size_t b) { return g.mul(a, b); })];
  }
  return h;
}

std::optional<BruteCohomology> brute_force_cohomology(const PartialGroup& t, std::uint64_t m,
                                                      const std::vector<std::uint64_t>& mult,
                                                      int n, bool normalized,
                                                      std::uint64_t limit) {
  Complex c;
  c.m = m;
  c.mult = mult;
  c.mul = [&t](ElementId a, ElementId b) { return t.product(a, b); };
  for (int d = 0; d <= n + 1; ++d) {
    std::vector<Word> words;
    for (const Word& w : t.words(d)) {
      if (normalized && std::find(w.begin(), w.end(), kUnit) != w.end()) continue;
      words.push_back(w);
    }
    c.basis.push_back(std::move(words));
  }
  c.build_index();
  return run(c, n, limit);
}

std::optional<BruteCohomology> brute_force_group_cohomology(
    const FiniteGroup& g, std::uint64_t m, const std::vector<std::uint64_t>& mult, int n,
    std::uint64_t limit) {
  Complex c;
  c.m = m;
  c.mult = mult;
  c.mul = [&g](ElementId a, ElementId b) { return static_cast<ElementId>(g.mul(a, b)); };
  c.basis.push_back({Word{}});
  for (int d = 1; d <= n + 1; ++d) {
    std::vector<Word> words;
    for (const Word& w : c.basis.back()) {
      for (std::size_t x = 0; x < g.order(); ++x) {
        Word v = w;
        v.push_back(static_cast<ElementId>(x));
        words.push_back(std::move(v));
      }
    }
    c.basis.push_back(std::move(words));
  }
  c.build_index();
  return run(c, n, limit);
}

std::vector<std::size_t> group_center(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (std::size_t x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<std::vector<std::size_t>> group_automorphisms(const FiniteGroup& g) {
  std::vector<std::size_t> rest;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (x != g.unit()) rest.push_back(x);
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> images = rest;
  do {
    std::vector<std::size_t> f(g.order());
    f[g.unit()] = g.unit();
    for (std::size_t i = 0; i < rest.size(); ++i) f[rest[i]] = images[i];
    bool hom = true;
    for (std::size_t a = 0; a < g.order() && hom; ++a) {
      for (std::size_t b = 0; b < g.order() && hom; ++b) hom = f[g.mul(a, b)] == g.mul(f[a], f[b]);
    }
    if (hom) out.push_back(std::move(f));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

SchreierClasses schreier_extensions(const FiniteGroup& k, const FiniteGroup& h,
                                    const std::vector<std::vector<std::size_t>>& alpha) {
  const std::size_t kn = k.order(), hn = h.order();
  using Perm = std::vector<std::size_t>;
  Perm id(kn);
  std::iota(id.begin(), id.end(), std::size_t{0});

  std::vector<std::vector<Perm>> sigma_choices(hn);
  for (std::size_t g = 0; g < hn; ++g) {
    if (g == h.unit()) {
      sigma_choices[g] = {id};
      continue;
    }
    std::set<Perm> s;
    for (std::size_t a = 0; a < kn; ++a) {
      Perm p(kn);
      for (std::size_t x = 0; x < kn; ++x) {
        p[x] = k.mul(k.mul(a, alpha[g][x]), k.inverse(a));
      }
      s.insert(p);
    }
    sigma_choices[g].assign(s.begin(), s.end());
  }

  struct Datum {
    std::vector<Perm> sigma;
    std::vector<std::size_t> f;  // f[g * hn + h]
  };
  std::vector<Datum> data;
  std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
  for (std::size_t g = 0; g < hn; ++g) {
    for (std::size_t x = 0; x < hn; ++x) {
      if (g != h.unit() && x != h.unit()) free_pairs.emplace_back(g, x);
    }
  }

  std::vector<std::size_t> sc(hn, 0);
  while (true) {
    Datum d;
    for (std::size_t g = 0; g < hn; ++g) d.sigma.push_back(sigma_choices[g][sc[g]]);
    std::vector<std::size_t> fc(free_pairs.size(), 0);
    while (true) {
      d.f.assign(hn * hn, k.unit());
      for (std::size_t i = 0; i < free_pairs.size(); ++i) {
        d.f[free_pairs[i].first * hn + free_pairs[i].second] = fc[i];
      }
      bool ok = true;
      for (std::size_t g = 0; g < hn && ok; ++g) {
        for (std::size_t x = 0; x < hn && ok; ++x) {
          const std::size_t c = d.f[g * hn + x];
          const std::size_t gx = h.mul(g, x);
          for (std::size_t z = 0; z < kn && ok; ++z) {
            ok = d.sigma[g][d.sigma[x][z]] ==
                 k.mul(k.mul(c, d.sigma[gx][z]), k.inverse(c));
          }
          for (std::size_t y = 0; y < hn && ok; ++y) {
            const std::size_t lhs = k.mul(d.sigma[g][d.f[x * hn + y]], d.f[g * hn + h.mul(x, y)]);
            const std::size_t rhs = k.mul(d.f[g * hn + x], d.f[gx * hn + y]);
            ok = lhs == rhs;
          }
        }
      }
      if (ok) data.push_back(d);
      std::size_t i = 0;
      while (i < fc.size() && ++fc[i] == kn) fc[i++] = 0;
      if (i == fc.size()) break;
    }
    std::size_t i = 0;
    while (i < hn && ++sc[i] == sigma_choices[i].size()) sc[i++] = 0;
    if (i == hn) break;
  }

  auto mul = [&](const Datum& d, std::size_t a, std::size_t b) {
    const std::size_t x = a / hn, g = a % hn, z = b / hn, y = b % hn;
    return k.mul(k.mul(x, d.sigma[g][z]), d.f[g * hn + y]) * hn + h.mul(g, y);
  };
  auto equivalent = [&](const Datum& a, const Datum& b) {
    std::vector<std::size_t> c(hn, k.unit());
    std::vector<std::size_t> free_g;
    for (std::size_t g = 0; g < hn; ++g) {
      if (g != h.unit()) free_g.push_back(g);
    }
    std::vector<std::size_t> cc(free_g.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free_g.size(); ++i) c[free_g[i]] = cc[i];
      auto psi = [&](std::size_t e) { return k.mul(e / hn, c[e % hn]) * hn + e % hn; };
      bool hom = true;
      for (std::size_t u = 0; u < kn * hn && hom; ++u) {
        for (std::size_t v = 0; v < kn * hn && hom; ++v) {
          hom = psi(mul(a, u, v)) == mul(b, psi(u), psi(v));
        }
      }
      if (hom) return true;
      std::size_t i = 0;
      while (i < cc.size() && ++cc[i] == kn) cc[i++] = 0;
      if (i == cc.size()) return false;
    }
  };

  SchreierClasses out;
  out.data = data.size();
  std::vector<const Datum*> reps;
  for (const Datum& d : data) {
    if (std::none_of(reps.begin(), reps.end(), [&](const Datum* r) { return equivalent(d, *r); })) {
      reps.push_back(&d);
    }
  }
  const std::size_t unit = k.unit() * hn + h.unit();
  for (const Datum* r : reps) {
    Histogram hist;
    bool abelian = true;
    for (std::size_t u = 0; u < kn * hn; ++u) {
      ++hist[element_order(u, unit, [&](std::size_t a, std::size_t b) { return mul(*r, a, b); })];
      for (std::size_t v = 0; v < kn * hn; ++v) abelian = abelian && mul(*r, u, v) == mul(*r, v, u);
    }
    out.totals.push_back(std::move(hist));
    out.abelian.push_back(abelian);
  }
  return out;
}

}  // namespace parcoh::testing
