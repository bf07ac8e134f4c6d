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

#include "dmat/linalg.hpp"

#include <utility>

namespace dmat {
namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kMersenne61);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kMersenne61) s -= kMersenne61;
  return s;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& v) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), kMersenne61);
  return r.get_ui();
}

}  // namespace

IntMatrix clear_column_denominators(const Matrix<Rationals>& m) {
  IntMatrix out{m.rows, m.cols, std::vector<mpz_class>(m.data.size())};
  for (int c = 0; c < m.cols; ++c) {
    mpz_class l = 1;
    for (int r = 0; r < m.rows; ++r) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    }
    for (int r = 0; r < m.rows; ++r) {
      out.at(r, c) = m.at(r, c).get_num() * (l / m.at(r, c).get_den());
    }
  }
  return out;
}

int bareiss_rank(IntMatrix m) {
  int rank = 0;
  mpz_class prev = 1;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int sel = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != rank) {
      for (int c = 0; c < m.cols; ++c) swap(m.at(sel, c), m.at(rank, c));
    }
    for (int r = rank + 1; r < m.rows; ++r) {
      for (int c = col + 1; c < m.cols; ++c) {
        mpz_class v = m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c);
        // Exact by Sylvester's identity.
        mpz_divexact(m.at(r, c).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(r, col) = 0;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

int rank_mod_mersenne61(const IntMatrix& m) {
  std::vector<std::uint64_t> a(m.data.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = reduce(m.data[i]);
  auto at = [&](int r, int c) -> std::uint64_t& {
    return a[static_cast<std::size_t>(r) * m.cols + c];
  };
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int sel = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (at(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != rank) {
      for (int c = 0; c < m.cols; ++c) std::swap(at(sel, c), at(rank, c));
    }
    const std::uint64_t inv = pow_mod(at(rank, col), kMersenne61 - 2);
    for (int r = rank + 1; r < m.rows; ++r) {
      if (at(r, col) == 0) continue;
      const std::uint64_t factor = mul_mod(at(r, col), inv);
      for (int c = col; c < m.cols; ++c) {
        const std::uint64_t sub = mul_mod(factor, at(rank, c));
        std::uint64_t v = at(r, c) + kMersenne61 - sub;
        if (v >= kMersenne61) v -= kMersenne61;
        at(r, c) = v;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace dmat
