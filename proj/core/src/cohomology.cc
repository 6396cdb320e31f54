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

#include "parcoh/cohomology.h"

#include <string>
#include <utility>

#include "parcoh/errors.h"

namespace parcoh {

namespace {

void check_degree(const PartialGroup& table, int n, int lowest, const char* what) {
  if (n < lowest) {
    throw TruncationError(std::string(what) + ": degree " + std::to_string(n) +
                          " is below " + std::to_string(lowest));
  }
  if (n > table.max_degree()) {
    throw TruncationError(std::string(what) + ": degree " + std::to_string(n) +
                          " exceeds the truncation degree " +
                          std::to_string(table.max_degree()));
  }
}

void add_block(IntMatrix& m, std::size_t row, std::size_t col, const IntMatrix& block) {
  for (std::size_t a = 0; a < block.rows(); ++a) {
    for (std::size_t b = 0; b < block.cols(); ++b) m(row + a, col + b) += block(a, b);
  }
}

void add_scalar(IntMatrix& m, std::size_t row, std::size_t col, std::size_t rank, int s) {
  for (std::size_t a = 0; a < rank; ++a) m(row + a, col + a) += s;
}

void check_shape(const PartialGroup& table, const FinAbGroup& coeffs, const Cochain& psi) {
  if (psi.degree < 0 || psi.degree > table.max_degree()) {
    throw TruncationError("cochain degree " + std::to_string(psi.degree) +
                          " is outside 0.." + std::to_string(table.max_degree()));
  }
  if (psi.rank != coeffs.rank() ||
      psi.values.size() != table.words(psi.degree).size() * coeffs.rank()) {
    throw StructuralError("cochain of degree " + std::to_string(psi.degree) +
                          " has the wrong number of values");
  }
}

std::optional<Word> degenerate_support(const PGAction& action, const Cochain& psi,
                                       std::size_t prefix) {
  const std::vector<Word>& words = action.table.words(psi.degree);
  for (std::size_t i = 0; i < words.size(); ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < prefix && j < words[i].size(); ++j) {
      hit = hit || words[i][j] == kUnit;
    }
    if (hit && !action.coeffs.is_zero_element(psi.at(i))) return words[i];
  }
  return std::nullopt;
}

std::vector<AbHom> inverses(const std::vector<AbHom>& maps) {
  std::vector<AbHom> out;
  out.reserve(maps.size());
  for (const AbHom& f : maps) out.push_back(f.inverse());
  return out;
}

}  // namespace

PGAction trivial_action(PartialGroup table, FinAbGroup coeffs) {
  std::vector<AbHom> phi(table.size(), AbHom::identity(coeffs));
  return {std::move(table), std::move(coeffs), std::move(phi)};
}

CheckResult validate_action(const PGAction& action) {
  const PartialGroup& t = action.table;
  if (action.phi.size() != t.size()) {
    throw StructuralError("action has " + std::to_string(action.phi.size()) +
                          " matrices for " + std::to_string(t.size()) + " elements");
  }
  for (ElementId x = 0; x < t.size(); ++x) {
    const AbHom& f = action.phi[x];
    if (!(f.source() == action.coeffs) || !(f.target() == action.coeffs)) {
      throw StructuralError("phi(" + t.name(x) + ") is not an endomorphism of the coefficients");
    }
    if (!f.is_automorphism()) {
      return CheckResult::fail({x}, "phi(" + t.name(x) + ") is not an automorphism");
    }
  }
  if (!action.phi[kUnit].equals(AbHom::identity(action.coeffs))) {
    return CheckResult::fail({kUnit}, "phi(1) is not the identity");
  }
  for (ElementId x = 0; x < t.size(); ++x) {
    if (!action.phi[t.inverse(x)].after(action.phi[x]).equals(AbHom::identity(action.coeffs))) {
      return CheckResult::fail({x}, "phi(x^-1) is not phi(x)^-1");
    }
  }
  for (const Word& w : t.words(2)) {
    const AbHom lhs = action.phi[t.product(w[0], w[1])];
    if (!lhs.equals(action.phi[w[0]].after(action.phi[w[1]]))) {
      return CheckResult::fail(w, "phi(xy) differs from phi(x) o phi(y)");
    }
  }
  return CheckResult::pass();
}

std::vector<Integer> Cochain::at(std::size_t word) const {
  return {values.begin() + static_cast<std::ptrdiff_t>(word * rank),
          values.begin() + static_cast<std::ptrdiff_t>((word + 1) * rank)};
}

void Cochain::set(std::size_t word, const std::vector<Integer>& value) {
  for (std::size_t k = 0; k < rank; ++k) values[word * rank + k] = value[k];
}

bool Cochain::is_zero() const {
  for (const Integer& v : values) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Cochain zero_cochain(const PartialGroup& table, const FinAbGroup& coeffs, int n) {
  return {n, coeffs.rank(), std::vector<Integer>(table.words(n).size() * coeffs.rank())};
}

Cochain combine(const FinAbGroup& coeffs, const Cochain& a, const Cochain& b, int sign) {
  if (a.degree != b.degree || a.values.size() != b.values.size() || a.rank != b.rank) {
    throw StructuralError("combining cochains of different shapes");
  }
  Cochain out = a;
  std::vector<Integer> v(a.rank);
  for (std::size_t w = 0; w < a.size(); ++w) {
    for (std::size_t k = 0; k < a.rank; ++k) {
      v[k] = a.values[w * a.rank + k] + sign * b.values[w * a.rank + k];
    }
    coeffs.reduce(v);
    out.set(w, v);
  }
  return out;
}

AbHom coboundary(const PGAction& action, int n) {
  const PartialGroup& t = action.table;
  check_degree(t, n, 1, "coboundary");
  const std::size_t r = action.coeffs.rank();
  const std::vector<Word>& top = t.words(n);
  IntMatrix m(top.size() * r, t.words(n - 1).size() * r);
  for (std::size_t i = 0; i < top.size(); ++i) {
    const Word& w = top[i];
    add_block(m, i * r, t.index_of_checked(face(t, w, 0)) * r, action.phi[w[0]].matrix());
    for (std::size_t k = 1; k <= w.size(); ++k) {
      add_scalar(m, i * r, t.index_of_checked(face(t, w, k)) * r, r, k % 2 ? -1 : 1);
    }
  }
  return AbHom(action.coeffs.power(t.words(n - 1).size()),
               action.coeffs.power(top.size()), std::move(m))
      .reduced();
}

Cochain apply_coboundary(const PGAction& action, const Cochain& psi) {
  const PartialGroup& t = action.table;
  check_shape(t, action.coeffs, psi);
  const int n = psi.degree + 1;
  check_degree(t, n, 1, "coboundary");
  Cochain out = zero_cochain(t, action.coeffs, n);
  const std::vector<Word>& top = t.words(n);
  for (std::size_t i = 0; i < top.size(); ++i) {
    const Word& w = top[i];
    std::vector<Integer> v =
        action.phi[w[0]].matrix() * psi.at(t.index_of_checked(face(t, w, 0)));
    for (std::size_t k = 1; k <= w.size(); ++k) {
      const std::vector<Integer> term = psi.at(t.index_of_checked(face(t, w, k)));
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (k % 2) {
          v[c] -= term[c];
        } else {
          v[c] += term[c];
        }
      }
    }
    action.coeffs.reduce(v);
    out.set(i, v);
  }
  return out;
}

FinAbGroup cohomology_group(const PGAction& action, int n) {
  const PartialGroup& t = action.table;
  check_degree(t, n + 1, 1, "cohomology");
  const AbHom d_in = n == 0 ? AbHom::zero(FinAbGroup::trivial(), action.coeffs.power(1))
                            : coboundary(action, n);
  return homology(d_in, coboundary(action, n + 1));
}

bool is_normalized(const PGAction& action, const Cochain& psi, std::size_t prefix) {
  check_shape(action.table, action.coeffs, psi);
  return !degenerate_support(action, psi, prefix);
}

bool is_normalized(const PGAction& action, const Cochain& psi) {
  return is_normalized(action, psi, static_cast<std::size_t>(psi.degree));
}

Normalization normalize_cocycle(const PGAction& action, const Cochain& psi) {
  const PartialGroup& t = action.table;
  check_shape(t, action.coeffs, psi);
  const int n = psi.degree;
  if (n + 1 <= t.max_degree()) {
    const Cochain d = apply_coboundary(action, psi);
    if (std::optional<Word> bad = degenerate_support(action, d, d.degree)) {
      throw PreconditionError("coboundary is nonzero on the degenerate word " +
                              t.format_word(*bad));
    }
  }

  Normalization out;
  Cochain cur = combine(action.coeffs, psi, zero_cochain(t, action.coeffs, n), 0);
  out.stages.push_back(cur);
  for (int i = 1; i <= n; ++i) {
    Cochain chi = zero_cochain(t, action.coeffs, n - 1);
    const std::vector<Word>& lower = t.words(n - 1);
    for (std::size_t v = 0; v < lower.size(); ++v) {
      std::vector<Integer> val =
          cur.at(t.index_of_checked(degeneracy(t, lower[v], static_cast<std::size_t>(i - 1))));
      if (i % 2 == 0) {
        for (Integer& c : val) c = -c;
      }
      action.coeffs.reduce(val);
      chi.set(v, val);
    }
    cur = combine(action.coeffs, cur, apply_coboundary(action, chi), -1);
    out.chi.push_back(std::move(chi));
    out.stages.push_back(cur);
  }
  if (std::optional<Word> bad = degenerate_support(action, cur, static_cast<std::size_t>(n))) {
    throw PreconditionError("normalization left a nonzero value on " + t.format_word(*bad) +
                            "; the coboundary of the input is not normalized");
  }
  out.normalized = std::move(cur);
  return out;
}

LocalSystem local_system_from_action(const PGAction& action) {
  return {action.table, action.coeffs, inverses(action.phi)};
}

CheckResult validate_local_system(const LocalSystem& system) {
  const PartialGroup& t = system.table;
  if (system.a.size() != t.size()) {
    throw StructuralError("local system has " + std::to_string(system.a.size()) +
                          " matrices for " + std::to_string(t.size()) + " elements");
  }
  for (ElementId x = 0; x < t.size(); ++x) {
    if (!system.a[x].is_automorphism()) {
      return CheckResult::fail({x}, "A(" + t.name(x) + ") is not an automorphism");
    }
  }
  if (!system.a[kUnit].equals(AbHom::identity(system.coeffs))) {
    return CheckResult::fail({kUnit}, "A(1) is not the identity");
  }
  for (const Word& w : t.words(2)) {
    if (!system.a[t.product(w[0], w[1])].equals(system.a[w[1]].after(system.a[w[0]]))) {
      return CheckResult::fail(w, "A(xy) differs from A(y) o A(x)");
    }
  }
  return CheckResult::pass();
}

std::vector<std::size_t> nondegenerate_indices(const PartialGroup& table, int n) {
  std::vector<std::size_t> out;
  const std::vector<Word>& words = table.words(n);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!is_degenerate(words[i])) out.push_back(i);
  }
  return out;
}

AbHom local_coboundary(const LocalSystem& system, int n) {
  const PartialGroup& t = system.table;
  check_degree(t, n, 1, "local coboundary");
  const std::size_t r = system.coeffs.rank();
  const std::vector<std::size_t> rows = nondegenerate_indices(t, n);
  const std::vector<std::size_t> cols = nondegenerate_indices(t, n - 1);
  std::vector<std::optional<std::size_t>> position(t.words(n - 1).size());
  for (std::size_t c = 0; c < cols.size(); ++c) position[cols[c]] = c;

  std::vector<std::optional<AbHom>> inv(t.size());
  IntMatrix m(rows.size() * r, cols.size() * r);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Word& w = t.words(n)[rows[i]];
    for (std::size_t k = 0; k <= w.size(); ++k) {
      const std::optional<std::size_t> c = position[t.index_of_checked(face(t, w, k))];
      if (!c) continue;
      if (k == 0) {
        if (!inv[w[0]]) inv[w[0]] = system.a[w[0]].inverse();
        add_block(m, i * r, *c * r, inv[w[0]]->matrix());
      } else {
        add_scalar(m, i * r, *c * r, r, k % 2 ? -1 : 1);
      }
    }
  }
  return AbHom(system.coeffs.power(cols.size()), system.coeffs.power(rows.size()),
               std::move(m))
      .reduced();
}

FinAbGroup local_cohomology_group(const LocalSystem& system, int n) {
  check_degree(system.table, n + 1, 1, "local cohomology");
  const AbHom d_in =
      n == 0 ? AbHom::zero(FinAbGroup::trivial(),
                           system.coeffs.power(nondegenerate_indices(system.table, 0).size()))
             : local_coboundary(system, n);
  return homology(d_in, local_coboundary(system, n + 1));
}

TheoryComparison compare_theories(const PGAction& action, int n) {
  TheoryComparison out;
  out.action_theory = cohomology_group(action, n);
  out.local_theory = local_cohomology_group(local_system_from_action(action), n);
  out.equal = iso_class_equal(out.action_theory, out.local_theory);
  return out;
}

}  // namespace parcoh
