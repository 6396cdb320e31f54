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

#include "parcoh/abelian.h"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "int_engine.h"
#include "parcoh/errors.h"

namespace parcoh {

using detail::Checked;
using detail::OverflowError;

namespace {

// Runs `fn.template operator()<Checked>()` and falls back to Integer.
template <class Fn>
auto with_fallback(Fn&& fn) {
  try {
    return fn.template operator()<Checked>();
  } catch (const OverflowError&) {
    return fn.template operator()<Integer>();
  }
}

std::vector<Integer> diagonal_of(const IntMatrix& d) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (d(i, i).is_zero()) break;
    out.push_back(d(i, i));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw StructuralError("ragged matrix literal");
    for (long long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& x) { return x.is_zero(); });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    }
  }
  return c;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v) {
  if (a.cols() != v.size()) throw StructuralError("matrix shape mismatch");
  std::vector<Integer> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Integer> SnfResult::diagonal() const { return diagonal_of(d); }

SnfResult snf(const IntMatrix& m) {
  return with_fallback([&]<class T>() {
    detail::Mat<T> a = detail::to_mat<T>(m);
    detail::Mat<T> u = detail::Mat<T>::identity(m.rows());
    detail::Mat<T> v = detail::Mat<T>::identity(m.cols());
    detail::smith_in_place(a, &u, &v);
    return SnfResult{detail::to_int_matrix(u), detail::to_int_matrix(a),
                     detail::to_int_matrix(v)};
  });
}

std::vector<Integer> smith_diagonal(const IntMatrix& m) {
  return with_fallback([&]<class T>() {
    detail::Mat<T> a = detail::to_mat<T>(m);
    detail::smith_in_place<T>(a, nullptr, nullptr);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(a.rows, a.cols); ++i) {
      if (detail::is_zero(a(i, i))) break;
      out.push_back(detail::to_integer(a(i, i)));
    }
    return out;
  });
}

// ---------------------------------------------------------------------------
// FinAbGroup

FinAbGroup::FinAbGroup(std::vector<Integer> orders) : orders_(std::move(orders)) {
  for (const Integer& m : orders_) {
    if (m < 0 || m == 1) {
      throw StructuralError("cyclic factor orders must be 0 or >= 2, got " +
                            m.str());
    }
  }
}

FinAbGroup FinAbGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  std::vector<Integer> finite;
  std::size_t free_rank = 0;
  for (const Integer& m : orders) {
    if (m < 0) throw StructuralError("negative cyclic order");
    if (m.is_zero()) {
      ++free_rank;
    } else if (m != 1) {
      finite.push_back(m);
    }
  }
  IntMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
  std::vector<Integer> chain;
  for (const Integer& d : smith_diagonal(diag)) {
    if (d != 1) chain.push_back(d);
  }
  chain.insert(chain.end(), free_rank, Integer(0));
  return FinAbGroup(std::move(chain));
}

FinAbGroup FinAbGroup::power(std::size_t copies) const {
  std::vector<Integer> out;
  out.reserve(orders_.size() * copies);
  for (std::size_t i = 0; i < copies; ++i) {
    out.insert(out.end(), orders_.begin(), orders_.end());
  }
  FinAbGroup g;
  g.orders_ = std::move(out);
  return g;
}

bool FinAbGroup::is_finite() const {
  return std::none_of(orders_.begin(), orders_.end(),
                      [](const Integer& m) { return m.is_zero(); });
}

Integer FinAbGroup::order() const {
  Integer n = 1;
  for (const Integer& m : orders_) n *= m;
  return n;
}

std::vector<Integer> FinAbGroup::invariant_factors() const {
  return from_cyclic_orders(orders_).orders_;
}

bool FinAbGroup::is_normalized() const { return invariant_factors() == orders_; }

void FinAbGroup::reduce(std::vector<Integer>& element) const {
  if (element.size() != orders_.size()) {
    throw StructuralError("element has wrong rank for its group");
  }
  for (std::size_t i = 0; i < element.size(); ++i) {
    if (orders_[i].is_zero()) continue;
    element[i] %= orders_[i];
    if (element[i] < 0) element[i] += orders_[i];
  }
}

bool FinAbGroup::is_zero_element(const std::vector<Integer>& element) const {
  for (std::size_t i = 0; i < element.size(); ++i) {
    const Integer& m = orders_[i];
    if (m.is_zero() ? !element[i].is_zero() : !(element[i] % m).is_zero()) {
      return false;
    }
  }
  return true;
}

std::string FinAbGroup::to_string() const {
  const std::vector<Integer> chain = invariant_factors();
  if (chain.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += " ⊕ ";
    out += chain[i].is_zero() ? std::string("Z") : "Z/" + chain[i].str();
  }
  return out;
}

bool iso_class_equal(const FinAbGroup& a, const FinAbGroup& b) {
  return a.invariant_factors() == b.invariant_factors();
}

// ---------------------------------------------------------------------------
// AbHom

AbHom::AbHom(FinAbGroup source, FinAbGroup target, IntMatrix matrix)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank()) {
    throw StructuralError("homomorphism matrix is " +
                          std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + ", expected " +
                          std::to_string(target_.rank()) + "x" +
                          std::to_string(source_.rank()));
  }
}

AbHom AbHom::identity(const FinAbGroup& g) {
  return AbHom(g, g, IntMatrix::identity(g.rank()));
}

AbHom AbHom::zero(const FinAbGroup& source, const FinAbGroup& target) {
  return AbHom(source, target, IntMatrix(target.rank(), source.rank()));
}

bool AbHom::is_well_defined() const {
  for (std::size_t j = 0; j < source_.rank(); ++j) {
    const Integer& mj = source_.order_of_generator(j);
    if (mj.is_zero()) continue;
    for (std::size_t i = 0; i < target_.rank(); ++i) {
      const Integer& ti = target_.order_of_generator(i);
      const Integer x = mj * matrix_(i, j);
      if (ti.is_zero() ? !x.is_zero() : !(x % ti).is_zero()) return false;
    }
  }
  return true;
}

bool AbHom::equals(const AbHom& other) const {
  if (!(source_ == other.source_) || !(target_ == other.target_)) return false;
  for (std::size_t i = 0; i < target_.rank(); ++i) {
    const Integer& ti = target_.order_of_generator(i);
    for (std::size_t j = 0; j < source_.rank(); ++j) {
      const Integer diff = matrix_(i, j) - other.matrix_(i, j);
      if (ti.is_zero() ? !diff.is_zero() : !(diff % ti).is_zero()) return false;
    }
  }
  return true;
}

bool AbHom::is_zero_map() const { return equals(zero(source_, target_)); }

std::vector<Integer> AbHom::apply(const std::vector<Integer>& element) const {
  std::vector<Integer> out = matrix_ * element;
  target_.reduce(out);
  return out;
}

AbHom AbHom::after(const AbHom& first) const {
  if (!(first.target_ == source_)) {
    throw StructuralError("composing homomorphisms with mismatched groups");
  }
  return AbHom(first.source_, target_, matrix_ * first.matrix_).reduced();
}

AbHom AbHom::reduced() const {
  AbHom out = *this;
  for (std::size_t i = 0; i < target_.rank(); ++i) {
    const Integer& ti = target_.order_of_generator(i);
    if (ti.is_zero()) continue;
    for (std::size_t j = 0; j < source_.rank(); ++j) {
      Integer& x = out.matrix_(i, j);
      x %= ti;
      if (x < 0) x += ti;
    }
  }
  return out;
}

namespace {

// [f | diag(target orders)], the free lift of f together with the target
// relations.
IntMatrix lift_with_relations(const AbHom& f) {
  const std::size_t r = f.target().rank();
  const std::size_t s = f.source().rank();
  IntMatrix m(r, s + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) m(i, j) = f.matrix()(i, j);
    m(i, s + i) = f.target().order_of_generator(i);
  }
  return m;
}

}  // namespace

bool AbHom::is_automorphism() const {
  if (!(source_ == target_) || !is_well_defined()) return false;
  const IntMatrix lifted = lift_with_relations(*this);
  for (std::size_t i = 0; i < target_.rank(); ++i) {
    std::vector<Integer> e(target_.rank());
    e[i] = 1;
    if (!solve_integer(lifted, e)) return false;
  }
  return homology(zero(FinAbGroup::trivial(), source_), *this).is_trivial();
}

AbHom AbHom::inverse() const {
  if (!is_automorphism()) {
    throw PreconditionError("inverse() requires an automorphism");
  }
  const IntMatrix lifted = lift_with_relations(*this);
  IntMatrix inv(source_.rank(), target_.rank());
  for (std::size_t i = 0; i < target_.rank(); ++i) {
    std::vector<Integer> e(target_.rank());
    e[i] = 1;
    std::vector<Integer> x = *solve_integer(lifted, e);
    x.resize(source_.rank());
    source_.reduce(x);
    for (std::size_t r = 0; r < source_.rank(); ++r) inv(r, i) = x[r];
  }
  return AbHom(target_, source_, std::move(inv));
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a,
                                                  const std::vector<Integer>& b) {
  if (b.size() != a.rows()) throw StructuralError("solve: shape mismatch");
  const SnfResult s = snf(a);
  const std::vector<Integer> ub = s.u * b;
  const std::vector<Integer> diag = s.diagonal();
  std::vector<Integer> y(a.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < diag.size()) {
      if (!(ub[i] % diag[i]).is_zero()) return std::nullopt;
      y[i] = ub[i] / diag[i];
    } else if (!ub[i].is_zero()) {
      return std::nullopt;
    }
  }
  return s.v * y;
}

// ---------------------------------------------------------------------------
// Kernels and homology
//
// When the relevant group is finite of exponent e, every lattice involved
// contains e * Z^r, so entries can be kept below e and coordinates taken in
// L / eL. Otherwise elimination runs on exact integers.

namespace {

constexpr long long kModularExponentLimit = 1LL << 20;

// Exponent of a finite group when it is small enough for the modular path.
std::optional<long long> small_exponent(const FinAbGroup& g) {
  if (!g.is_finite() || g.is_trivial()) return std::nullopt;
  Integer e = 1;
  for (const Integer& m : g.orders()) {
    e = boost::multiprecision::lcm(e, m);
    if (e > kModularExponentLimit) return std::nullopt;
  }
  return static_cast<long long>(e);
}

template <class T>
std::vector<T> moduli_of(const FinAbGroup& g) {
  std::vector<T> out;
  out.reserve(g.rank());
  for (const Integer& m : g.orders()) out.push_back(detail::convert<T>(m));
  return out;
}

template <class T>
detail::Lattice<T> kernel_core(const AbHom& f) {
  return detail::kernel_of_rows<T>(f.source().rank(), detail::to_sparse_rows<T>(f.matrix()),
                                   moduli_of<T>(f.target()));
}

// Columns of d_in followed by the relations of the middle term; throws
// ComplexError when d_out does not kill some column of d_in.
template <class T>
std::vector<std::vector<T>> quotient_generators(const AbHom& d_in,
                                                const std::vector<detail::SparseRow<T>>& out_rows,
                                                const std::vector<T>& out_mod) {
  const FinAbGroup& middle = d_in.target();
  const std::size_t r = middle.rank();
  std::vector<std::vector<T>> gens;
  for (std::size_t j = 0; j < d_in.source().rank(); ++j) {
    std::vector<T> g(r, T(0));
    for (std::size_t i = 0; i < r; ++i) g[i] = detail::convert<T>(d_in.matrix()(i, j));
    for (std::size_t row = 0; row < out_rows.size(); ++row) {
      T s(0);
      for (const auto& [c, b] : out_rows[row]) s += b * g[c];
      const T& m = out_mod[row];
      if (detail::is_zero(m) ? !detail::is_zero(s) : !detail::is_zero(s % m)) {
        throw ComplexError("d_out o d_in is nonzero on source generator " + std::to_string(j) +
                           " (target coordinate " + std::to_string(row) + ")");
      }
    }
    gens.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (middle.order_of_generator(i).is_zero()) continue;
    std::vector<T> g(r, T(0));
    g[i] = detail::convert<T>(middle.order_of_generator(i));
    gens.push_back(std::move(g));
  }
  return gens;
}

FinAbGroup homology_modular(const AbHom& d_in, const AbHom& d_out, long long exponent) {
  using T = detail::Checked;
  const T e(exponent);
  const std::size_t r = d_in.target().rank();
  const auto out_rows = detail::to_sparse_rows<T>(d_out.matrix());
  const auto out_mod = moduli_of<T>(d_out.target());
  std::vector<std::vector<T>> gens = quotient_generators<T>(d_in, out_rows, out_mod);

  detail::Lattice<T> k = detail::kernel_of_rows<T>(r, out_rows, out_mod, &e);
  detail::echelon_mod(k, e);
  std::vector<std::vector<long long>> coords;
  coords.reserve(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto x = detail::coordinates_mod(k, std::move(gens[j]), e);
    if (!x) {
      throw ComplexError("homology: d_out is not well defined on generator " +
                         std::to_string(j));
    }
    std::vector<long long>& c = coords.emplace_back(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = (*x)[i].value();
  }
  std::vector<Integer> orders;
  for (long long m : detail::cokernel_mod(coords, r, exponent)) orders.emplace_back(m);
  return FinAbGroup::from_cyclic_orders(orders);
}

}  // namespace

IntMatrix kernel_lattice(const AbHom& f) {
  auto to_matrix = []<class T>(const detail::Lattice<T>& k) {
    IntMatrix out(k.dim, k.cols.size());
    for (std::size_t c = 0; c < k.cols.size(); ++c) {
      for (std::size_t r = 0; r < k.dim; ++r) out(r, c) = detail::to_integer(k.cols[c][r]);
    }
    return out;
  };
  if (const auto e = small_exponent(f.source())) {
    try {
      using T = detail::Checked;
      const T et(*e);
      detail::Lattice<T> k = detail::kernel_of_rows<T>(
          f.source().rank(), detail::to_sparse_rows<T>(f.matrix()), moduli_of<T>(f.target()), &et);
      detail::echelon_mod(k, et);
      return to_matrix(k);
    } catch (const detail::OverflowError&) {
    }
  }
  return with_fallback([&]<class T>() { return to_matrix(kernel_core<T>(f)); });
}

FinAbGroup homology(const AbHom& d_in, const AbHom& d_out) {
  if (!(d_in.target() == d_out.source())) {
    throw StructuralError("homology: d_in target differs from d_out source");
  }
  const FinAbGroup& middle = d_in.target();
  const std::size_t r = middle.rank();
  if (const auto e = small_exponent(middle)) {
    try {
      return homology_modular(d_in, d_out, *e);
    } catch (const detail::OverflowError&) {
    }
  }

  std::vector<Integer> factors = with_fallback([&]<class T>() {
    const std::vector<detail::SparseRow<T>> out_rows =
        detail::to_sparse_rows<T>(d_out.matrix());
    const std::vector<T> out_mod = moduli_of<T>(d_out.target());
    std::vector<std::vector<T>> gens = quotient_generators<T>(d_in, out_rows, out_mod);

    detail::Lattice<T> k = detail::kernel_of_rows<T>(r, out_rows, out_mod);
    const std::vector<std::size_t> pivots = detail::column_echelon(k);
    const std::size_t kk = k.cols.size();

    detail::Mat<T> coords(kk, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      std::optional<std::vector<T>> x =
          detail::echelon_coordinates(k, pivots, std::move(gens[j]));
      if (!x) {
        throw ComplexError("homology: d_out is not well defined on generator " +
                           std::to_string(j));
      }
      for (std::size_t i = 0; i < kk; ++i) coords(i, j) = (*x)[i];
    }
    detail::smith_in_place<T>(coords, nullptr, nullptr);
    std::vector<Integer> result;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(coords.rows, coords.cols); ++i) {
      if (detail::is_zero(coords(i, i))) break;
      ++rank;
      if (coords(i, i) != T(1)) result.push_back(detail::to_integer(coords(i, i)));
    }
    result.insert(result.end(), kk - rank, Integer(0));
    return result;
  });
  return FinAbGroup(std::move(factors));
}

}  // namespace parcoh
