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

// Elimination kernels shared by snf(), kernel_lattice() and homology().
//
// Everything here is templated on the scalar type so the same code runs on
// overflow-checked int64 (fast path) and on boost cpp_int (fallback). The
// public entry points in abelian.cc try Checked first and rerun on Integer
// when an OverflowError escapes.

#ifndef PARCOH_CORE_SRC_INT_ENGINE_H_
#define PARCOH_CORE_SRC_INT_ENGINE_H_

#include <algorithm>
#include <climits>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "parcoh/abelian.h"

namespace parcoh::detail {

struct OverflowError {};

class Checked {
 public:
  Checked() = default;
  Checked(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  long long value() const { return v_; }

  friend Checked operator+(Checked a, Checked b) {
    long long r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    long long r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    long long r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) {
    if (a.v_ == LLONG_MIN && b.v_ == -1) throw OverflowError{};
    return a.v_ / b.v_;
  }
  friend Checked operator%(Checked a, Checked b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked operator-() const {
    if (v_ == LLONG_MIN) throw OverflowError{};
    return -v_;
  }
  Checked& operator+=(Checked o) { return *this = *this + o; }
  Checked& operator-=(Checked o) { return *this = *this - o; }
  Checked& operator*=(Checked o) { return *this = *this * o; }

  friend auto operator<=>(Checked a, Checked b) = default;
  friend bool operator==(Checked a, Checked b) = default;

 private:
  long long v_ = 0;
};

inline Checked abs_value(Checked a) { return a < 0 ? -a : a; }
inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline bool is_zero(Checked a) { return a == 0; }
inline bool is_zero(const Integer& a) { return a.is_zero(); }

template <class T>
T gcd_value(T a, T b) {
  a = abs_value(a);
  b = abs_value(b);
  while (!is_zero(b)) {
    T r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Remainder in [0, m) for m > 0.
template <class T>
T floor_mod(const T& a, const T& m) {
  T r = a % m;
  if (r < 0) r += m;
  return r;
}

template <class T>
T convert(const Integer& x);

template <>
inline Integer convert<Integer>(const Integer& x) {
  return x;
}

template <>
inline Checked convert<Checked>(const Integer& x) {
  if (x > LLONG_MAX || x < LLONG_MIN) throw OverflowError{};
  return static_cast<long long>(x);
}

inline Integer to_integer(const Integer& x) { return x; }
inline Integer to_integer(Checked x) { return Integer(x.value()); }

template <class T>
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  T& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, const T& k) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!is_zero((*this)(src, c))) (*this)(dst, c) += k * (*this)(src, c);
    }
  }
  // col_dst += k * col_src
  void add_col(std::size_t dst, std::size_t src, const T& k) {
    for (std::size_t r = 0; r < rows; ++r) {
      if (!is_zero((*this)(r, src))) (*this)(r, dst) += k * (*this)(r, src);
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) (*this)(i, c) = -(*this)(i, c);
  }
};

template <class T>
Mat<T> to_mat(const IntMatrix& m) {
  Mat<T> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = convert<T>(m(r, c));
  }
  return out;
}

template <class T>
IntMatrix to_int_matrix(const Mat<T>& m) {
  IntMatrix out(m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) out(r, c) = to_integer(m(r, c));
  }
  return out;
}

// In-place Smith normal form of `a`. When u / v are non-null they must be
// identity matrices of matching size and receive the row / column transforms
// so that u * a_in * v == a_out.
template <class T>
void smith_in_place(Mat<T>& a, Mat<T>* u, Mat<T>* v) {
  const std::size_t n = std::min(a.rows, a.cols);
  auto row_op = [&](std::size_t dst, std::size_t src, const T& k) {
    a.add_row(dst, src, k);
    if (u) u->add_row(dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const T& k) {
    a.add_col(dst, src, k);
    if (v) v->add_col(dst, src, k);
  };
  auto swap_r = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (u) u->swap_rows(i, j);
  };
  auto swap_c = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (v) v->swap_cols(i, j);
  };

  for (std::size_t t = 0; t < n; ++t) {
    // Global pivot: smallest |entry| in the block, first in row-major order.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    T best(0);
    for (std::size_t i = t; i < a.rows; ++i) {
      for (std::size_t j = t; j < a.cols; ++j) {
        const T& x = a(i, j);
        if (is_zero(x)) continue;
        T ax = abs_value(x);
        if (!pivot || ax < best) {
          best = ax;
          pivot = {i, j};
          if (best == T(1)) break;
        }
      }
      if (pivot && best == T(1)) break;
    }
    if (!pivot) break;
    swap_r(t, pivot->first);
    swap_c(t, pivot->second);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows; ++i) {
        if (is_zero(a(i, t))) continue;
        T q = a(i, t) / a(t, t);
        if (!is_zero(q)) row_op(i, t, -q);
        if (!is_zero(a(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols; ++j) {
        if (is_zero(a(t, j))) continue;
        T q = a(t, j) / a(t, t);
        if (!is_zero(q)) col_op(j, t, -q);
        if (!is_zero(a(t, j))) clean = false;
      }
      if (!clean) {
        // Re-pivot on the smallest remainder in row t / column t.
        std::size_t bi = t, bj = t;
        T b = abs_value(a(t, t));
        for (std::size_t i = t + 1; i < a.rows; ++i) {
          if (!is_zero(a(i, t)) && abs_value(a(i, t)) < b) {
            b = abs_value(a(i, t));
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < a.cols; ++j) {
          if (!is_zero(a(t, j)) && abs_value(a(t, j)) < b) {
            b = abs_value(a(t, j));
            bi = t;
            bj = j;
          }
        }
        swap_r(t, bi);
        swap_c(t, bj);
        continue;
      }
      // Divisibility: the pivot must divide the whole remaining block.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < a.rows && !bad_row; ++i) {
        for (std::size_t j = t + 1; j < a.cols; ++j) {
          if (!is_zero(a(i, j) % a(t, t))) {
            bad_row = i;
            break;
          }
        }
      }
      if (!bad_row) break;
      row_op(t, *bad_row, T(1));
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

// Sparse row: (column, value) pairs.
template <class T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

template <class T>
std::vector<SparseRow<T>> to_sparse_rows(const IntMatrix& m) {
  std::vector<SparseRow<T>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) rows[r].emplace_back(c, convert<T>(m(r, c)));
    }
  }
  return rows;
}

// Column-major lattice basis in Z^dim.
template <class T>
struct Lattice {
  std::size_t dim = 0;
  std::vector<std::vector<T>> cols;
};

// Basis of {v in Z^dim : rows(v)_i == 0 mod moduli[i]} (modulus 0 means
// exact equality). Incremental: one congruence at a time.
//
// With `reduce`, the kernel is known to contain reduce * Z^dim and the
// result only generates it together with that sublattice; entries stay in
// [0, reduce) and zero columns are dropped.
template <class T>
Lattice<T> kernel_of_rows(std::size_t dim, const std::vector<SparseRow<T>>& rows,
                          const std::vector<T>& moduli, const T* reduce = nullptr) {
  Lattice<T> k;
  k.dim = dim;
  k.cols.assign(dim, std::vector<T>(dim, T(0)));
  for (std::size_t i = 0; i < dim; ++i) k.cols[i][i] = T(1);

  std::vector<T> f;
  std::vector<std::size_t> live;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const SparseRow<T>& row = rows[r];
    if (row.empty() || k.cols.empty()) continue;
    const T& m = moduli[r];
    const std::size_t kk = k.cols.size();
    f.assign(kk, T(0));
    live.clear();
    for (std::size_t j = 0; j < kk; ++j) {
      T s(0);
      const std::vector<T>& col = k.cols[j];
      for (const auto& [c, b] : row) {
        if (!is_zero(col[c])) s += b * col[c];
      }
      if (!is_zero(m)) s = floor_mod(s, m);
      f[j] = s;
      if (!is_zero(s)) live.push_back(j);
    }
    if (live.empty()) continue;
    const std::vector<std::size_t> touched = live;

    while (live.size() > 1) {
      std::size_t p = live[0];
      for (std::size_t j : live) {
        if (abs_value(f[j]) < abs_value(f[p])) p = j;
      }
      std::vector<std::size_t> next{p};
      for (std::size_t j : live) {
        if (j == p) continue;
        T q = f[j] / f[p];
        if (!is_zero(q)) {
          std::vector<T>& cj = k.cols[j];
          const std::vector<T>& cp = k.cols[p];
          for (std::size_t x = 0; x < dim; ++x) {
            if (!is_zero(cp[x])) cj[x] -= q * cp[x];
          }
          f[j] -= q * f[p];
        }
        if (!is_zero(f[j])) next.push_back(j);
      }
      live.swap(next);
    }
    const std::size_t p = live[0];
    std::optional<std::size_t> erased;
    if (is_zero(m)) {
      k.cols.erase(k.cols.begin() + static_cast<std::ptrdiff_t>(p));
      erased = p;
    } else {
      T scale = m / gcd_value(f[p], m);
      for (T& x : k.cols[p]) {
        if (!is_zero(x)) x *= scale;
      }
    }
    if (reduce) {
      for (std::size_t j : touched) {
        if (erased && j == *erased) continue;
        const std::size_t at = erased && j > *erased ? j - 1 : j;
        for (T& x : k.cols[at]) x = floor_mod(x, *reduce);
      }
      std::erase_if(k.cols, [](const std::vector<T>& c) {
        return std::all_of(c.begin(), c.end(), [](const T& x) { return is_zero(x); });
      });
    }
  }
  return k;
}

// Brings the lattice basis to column echelon form; returns pivot rows.
template <class T>
std::vector<std::size_t> column_echelon(Lattice<T>& k) {
  std::vector<std::size_t> pivots;
  std::size_t cur = 0;
  const std::size_t kk = k.cols.size();
  for (std::size_t row = 0; row < k.dim && cur < kk; ++row) {
    std::vector<std::size_t> live;
    for (std::size_t j = cur; j < kk; ++j) {
      if (!is_zero(k.cols[j][row])) live.push_back(j);
    }
    if (live.empty()) continue;
    while (live.size() > 1) {
      std::size_t p = live[0];
      for (std::size_t j : live) {
        if (abs_value(k.cols[j][row]) < abs_value(k.cols[p][row])) p = j;
      }
      std::vector<std::size_t> next{p};
      for (std::size_t j : live) {
        if (j == p) continue;
        T q = k.cols[j][row] / k.cols[p][row];
        std::vector<T>& cj = k.cols[j];
        const std::vector<T>& cp = k.cols[p];
        for (std::size_t x = row; x < k.dim; ++x) {
          if (!is_zero(cp[x])) cj[x] -= q * cp[x];
        }
        if (!is_zero(cj[row])) next.push_back(j);
      }
      live.swap(next);
    }
    std::swap(k.cols[cur], k.cols[live[0]]);
    if (k.cols[cur][row] < 0) {
      for (T& x : k.cols[cur]) x = -x;
    }
    pivots.push_back(row);
    ++cur;
  }
  return pivots;
}

// Coordinates of `v` in an echelon basis; nullopt when v is outside the span.
template <class T>
std::optional<std::vector<T>> echelon_coordinates(
    const Lattice<T>& k, const std::vector<std::size_t>& pivots,
    std::vector<T> v) {
  std::vector<T> x(k.cols.size(), T(0));
  for (std::size_t c = 0; c < k.cols.size(); ++c) {
    const std::size_t p = pivots[c];
    if (is_zero(v[p])) continue;
    const std::vector<T>& col = k.cols[c];
    if (!is_zero(v[p] % col[p])) return std::nullopt;
    T q = v[p] / col[p];
    for (std::size_t r = p; r < k.dim; ++r) {
      if (!is_zero(col[r])) v[r] -= q * col[r];
    }
    x[c] = q;
  }
  for (const T& r : v) {
    if (!is_zero(r)) return std::nullopt;
  }
  return x;
}

// Lower triangular basis of the lattice generated by k and e * Z^dim, with
// pivot (r, r) dividing e and entries below it in [0, e).
template <class T>
void echelon_mod(Lattice<T>& k, const T& e) {
  const std::size_t dim = k.dim;
  std::vector<std::vector<T>> pool = std::move(k.cols);
  std::vector<std::vector<T>> basis;
  basis.reserve(dim);
  for (std::size_t row = 0; row < dim; ++row) {
    std::vector<T> fresh(dim, T(0));
    fresh[row] = e;
    pool.push_back(std::move(fresh));
    std::vector<std::size_t> live;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (!is_zero(pool[j][row])) live.push_back(j);
    }
    while (live.size() > 1) {
      std::size_t p = live[0];
      for (std::size_t j : live) {
        if (abs_value(pool[j][row]) < abs_value(pool[p][row])) p = j;
      }
      std::vector<std::size_t> next{p};
      for (std::size_t j : live) {
        if (j == p) continue;
        const T q = pool[j][row] / pool[p][row];
        for (std::size_t x = row; x < dim; ++x) {
          if (!is_zero(pool[p][x])) pool[j][x] = floor_mod(pool[j][x] - q * pool[p][x], e);
        }
        if (!is_zero(pool[j][row])) next.push_back(j);
      }
      live.swap(next);
    }
    std::vector<T> pivot = std::move(pool[live[0]]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(live[0]));
    if (pivot[row] < 0) pivot[row] = -pivot[row];
    for (std::size_t x = row + 1; x < dim; ++x) pivot[x] = floor_mod(pivot[x], e);
    basis.push_back(std::move(pivot));
    std::erase_if(pool, [](const std::vector<T>& c) {
      return std::all_of(c.begin(), c.end(), [](const T& x) { return is_zero(x); });
    });
  }
  k.cols = std::move(basis);
}

// Coordinates modulo e of v in a basis from echelon_mod. Residues are kept
// modulo e^2, which lies in e times the lattice.
template <class T>
std::optional<std::vector<T>> coordinates_mod(const Lattice<T>& k, std::vector<T> v,
                                              const T& e) {
  const T e2 = e * e;
  for (T& x : v) x = floor_mod(x, e2);
  std::vector<T> out(k.dim, T(0));
  for (std::size_t c = 0; c < k.dim; ++c) {
    const std::vector<T>& col = k.cols[c];
    if (is_zero(v[c])) continue;
    if (!is_zero(v[c] % col[c])) return std::nullopt;
    const T q = v[c] / col[c];
    for (std::size_t r = c; r < k.dim; ++r) {
      if (!is_zero(col[r])) v[r] = floor_mod(v[r] - q * col[r], e2);
    }
    out[c] = floor_mod(q, e);
  }
  return out;
}

inline long long inverse_mod(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, b = a;
  while (b != 0) {
    const long long q = g / b;
    std::tie(g, b) = std::make_pair(b, g - q * b);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  return ((x % m) + m) % m;
}

// Cyclic orders of (Z/e)^rows / <columns>, one prime power at a time.
inline std::vector<long long> cokernel_mod(const std::vector<std::vector<long long>>& columns,
                                           std::size_t rows, long long e) {
  std::vector<std::pair<long long, int>> primes;
  long long rest = e;
  for (long long p = 2; p * p <= rest; ++p) {
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (k) primes.emplace_back(p, k);
  }
  if (rest > 1) primes.emplace_back(rest, 1);

  std::vector<long long> orders;
  for (const auto& [p, k] : primes) {
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    auto valuation = [&](long long x) {
      int v = 0;
      while (v < k && x % p == 0) {
        x /= p;
        ++v;
      }
      return v;
    };
    const std::size_t cols = columns.size();
    std::vector<long long> a(rows * cols);
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t i = 0; i < rows; ++i) a[i * cols + j] = columns[j][i] % q;
    }
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
      int best = k;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = t; i < rows && best > 0; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          const long long x = a[i * cols + j];
          if (x == 0) continue;
          const int v = valuation(x);
          if (v < best) {
            best = v;
            bi = i;
            bj = j;
            if (v == 0) break;
          }
        }
      }
      if (best == k) break;
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[t * cols + j], a[bi * cols + j]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i * cols + t], a[i * cols + bj]);
      long long pv = 1;
      for (int i = 0; i < best; ++i) pv *= p;
      const long long unit_inv = inverse_mod(a[t * cols + t] / pv, q);
      for (std::size_t j = t; j < cols; ++j) a[t * cols + j] = a[t * cols + j] * unit_inv % q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const long long f = a[i * cols + t] / pv;
        if (f == 0) continue;
        for (std::size_t j = t; j < cols; ++j) {
          a[i * cols + j] = ((a[i * cols + j] - f * a[t * cols + j]) % q + q) % q;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) a[t * cols + j] = 0;
      if (best > 0) orders.push_back(pv);
    }
    for (; t < rows; ++t) orders.push_back(q);
  }
  return orders;
}

}  // namespace parcoh::detail

#endif  // PARCOH_CORE_SRC_INT_ENGINE_H_
