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

// Exact linear algebra over finitely generated abelian groups.
//
// A FinAbGroup is presented as a direct sum of cyclic groups Z/m (m = 0
// meaning Z). Elements are integer vectors in that presentation and
// homomorphisms are integer matrices acting on columns. All arithmetic is
// exact; internally the elimination routines run on checked 64-bit integers
// and transparently restart on arbitrary-precision integers on overflow.

#ifndef PARCOH_ABELIAN_H_
#define PARCOH_ABELIAN_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parcoh {

// Expression templates off: values behave like plain integers in generic code.
using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix transposed() const;
  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& a,
                               const std::vector<Integer>& v);

// Determinant by fraction-free Bareiss elimination. Square matrices only.
Integer determinant(const IntMatrix& m);

// Result of snf(): u * m * v == d, d diagonal with d_i | d_{i+1} and
// nonnegative diagonal, u and v unimodular.
struct SnfResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  // Nonzero diagonal entries of d, in order.
  std::vector<Integer> diagonal() const;
  std::size_t rank() const { return diagonal().size(); }
};

// Smith normal form. Pivot: smallest absolute value nonzero entry of the
// remaining block, ties broken by row-major position.
SnfResult snf(const IntMatrix& m);

// Invariant factors only (no transforms); cheaper on large inputs.
std::vector<Integer> smith_diagonal(const IntMatrix& m);

// Finitely generated abelian group presented as Z/orders[0] + Z/orders[1] + ...
// Each order is 0 (infinite cyclic) or at least 2.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<Integer> orders);

  // The normalized form: divisibility chain m_1 | m_2 | ... with zeros last.
  static FinAbGroup from_cyclic_orders(const std::vector<Integer>& orders);
  static FinAbGroup cyclic(long long m) { return FinAbGroup({Integer(m)}); }
  static FinAbGroup trivial() { return FinAbGroup(); }
  // Direct sum of `copies` copies of this group, in block order.
  FinAbGroup power(std::size_t copies) const;

  std::size_t rank() const { return orders_.size(); }
  const std::vector<Integer>& orders() const { return orders_; }
  const Integer& order_of_generator(std::size_t i) const { return orders_[i]; }

  bool is_finite() const;
  bool is_trivial() const { return orders_.empty(); }
  // Group order; 0 when infinite.
  Integer order() const;

  // Invariant factors of the isomorphism class (chain with zeros last).
  std::vector<Integer> invariant_factors() const;
  bool is_normalized() const;

  // Reduces an element's coordinates into [0, m) for each finite factor.
  void reduce(std::vector<Integer>& element) const;
  bool is_zero_element(const std::vector<Integer>& element) const;

  // "Z/2 + Z/4" style rendering of the invariant factors, "0" if trivial.
  std::string to_string() const;

  bool operator==(const FinAbGroup& other) const = default;

 private:
  std::vector<Integer> orders_;
};

// Homomorphism source -> target given by a (target.rank x source.rank)
// integer matrix.
class AbHom {
 public:
  AbHom() = default;
  AbHom(FinAbGroup source, FinAbGroup target, IntMatrix matrix);

  static AbHom identity(const FinAbGroup& g);
  static AbHom zero(const FinAbGroup& source, const FinAbGroup& target);

  const FinAbGroup& source() const { return source_; }
  const FinAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  // Source relations land in target relations.
  bool is_well_defined() const;
  // Entries agree modulo the target relations row by row.
  bool equals(const AbHom& other) const;
  bool is_zero_map() const;

  std::vector<Integer> apply(const std::vector<Integer>& element) const;
  // this after `first`.
  AbHom after(const AbHom& first) const;
  // Inverse of an automorphism; throws PreconditionError otherwise.
  AbHom inverse() const;
  bool is_automorphism() const;

  // Matrix entries reduced into [0, m) row-wise.
  AbHom reduced() const;

 private:
  FinAbGroup source_;
  FinAbGroup target_;
  IntMatrix matrix_;
};

// One integer solution x of a * x == b, if any.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a,
                                                  const std::vector<Integer>& b);

// Lattice basis (as columns of a source.rank x k matrix) of the subgroup
// {v in Z^rank : f(v) = 0 in the target} of the free cover of the source.
IntMatrix kernel_lattice(const AbHom& f);

// Homology ker(d_out) / im(d_in) at the middle term, as invariant factors.
// Throws ComplexError naming a source generator if d_out * d_in != 0.
FinAbGroup homology(const AbHom& d_in, const AbHom& d_out);

bool iso_class_equal(const FinAbGroup& a, const FinAbGroup& b);

}  // namespace parcoh

#endif  // PARCOH_ABELIAN_H_
