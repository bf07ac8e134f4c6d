// Copyright 2026 The Authors.
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

// Exact elimination over any field type from field.hpp, plus a
// fraction-free integer route for rational matrices.

#ifndef DMAT_LINALG_HPP
#define DMAT_LINALG_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dmat/field.hpp"

namespace dmat {

template <typename F>
struct Echelon {
  Matrix<F> rref;
  std::vector<int> pivots;  // pivot column of each of the first rank rows
  int rank() const { return static_cast<int>(pivots.size()); }
};

// Gauss-Jordan elimination to reduced row echelon form.
template <typename F>
Echelon<F> row_reduce(Matrix<F> m) {
  const F& f = m.field;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r) {
      if (!f.is_zero(m.at(r, col))) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    }
    const auto scale = f.inv(m.at(row, col));
    for (int c = col; c < m.cols; ++c) m.at(row, c) = f.mul(m.at(row, c), scale);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || f.is_zero(m.at(r, col))) continue;
      const auto factor = m.at(r, col);
      for (int c = col; c < m.cols; ++c) {
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon<F>{std::move(m), std::move(pivots)};
}

template <typename F>
int rank_of(const Matrix<F>& m) {
  return row_reduce(m).rank();
}

// Rows form a basis of {x : m x = 0}.
template <typename F>
Matrix<F> kernel_of(const Matrix<F>& m) {
  const Echelon<F> e = row_reduce(m);
  const F& f = m.field;
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : e.pivots) is_pivot[c] = true;
  Matrix<F> k(f, m.cols - e.rank(), m.cols);
  int out = 0;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    k.at(out, free_col) = f.one();
    for (int r = 0; r < e.rank(); ++r) {
      k.at(out, e.pivots[r]) = f.neg(e.rref.at(r, free_col));
    }
    ++out;
  }
  return k;
}

template <typename F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.field, m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  }
  return t;
}

template <typename F>
Matrix<F> select_columns(const Matrix<F>& m, const std::vector<int>& cols) {
  Matrix<F> s(m.field, m.rows, static_cast<int>(cols.size()));
  for (int r = 0; r < m.rows; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(r, j) = m.at(r, cols[j]);
  }
  return s;
}

template <typename F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  const F& f = a.field;
  Matrix<F> p(f, a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r) {
    for (int k = 0; k < a.cols; ++k) {
      if (f.is_zero(a.at(r, k))) continue;
      for (int c = 0; c < b.cols; ++c) {
        p.at(r, c) = f.add(p.at(r, c), f.mul(a.at(r, k), b.at(k, c)));
      }
    }
  }
  return p;
}

template <typename F>
bool is_zero_matrix(const Matrix<F>& m) {
  for (const auto& x : m.data) {
    if (!m.field.is_zero(x)) return false;
  }
  return true;
}

// Row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> data;

  mpz_class& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const mpz_class& at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
};

// Each column multiplied by the lcm of its denominators. Column scaling
// leaves the column matroid and the rank unchanged.
IntMatrix clear_column_denominators(const Matrix<Rationals>& m);

// Rank by Bareiss fraction-free elimination; all intermediate values are
// exact integer minors.
int bareiss_rank(IntMatrix m);

// Rank of the matrix reduced modulo the prime 2^61 - 1. Never exceeds the
// rational rank.
int rank_mod_mersenne61(const IntMatrix& m);

}  // namespace dmat

#endif  // DMAT_LINALG_HPP
