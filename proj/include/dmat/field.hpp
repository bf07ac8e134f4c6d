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

// Exact fields: GF(p), GF(p^2) = GF(p)[a]/(a^2 + c1 a + c0), and Q.
//
// Each field type exposes the same small interface so the elimination code
// in linalg.hpp can be written once:
//   Elem zero(), one(), add, sub, neg, mul, inv, is_zero, equal,
//   parse(string), format(Elem), from_int(int64).

#ifndef DMAT_FIELD_HPP
#define DMAT_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace dmat {

bool is_prime_u32(std::uint64_t p);

class GFp {
 public:
  using Elem = std::uint32_t;

  // Throws InvalidField unless p is a prime <= 2^31.
  explicit GFp(std::uint64_t p);

  std::uint32_t p() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(std::uint64_t{a} * b % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  Elem from_int(std::int64_t v) const;

  Elem parse(const std::string& text) const;
  std::string format(Elem a) const { return std::to_string(a); }

  friend bool operator==(const GFp& x, const GFp& y) { return x.p_ == y.p_; }

 private:
  std::uint32_t p_;
};

class GFp2 {
 public:
  // e[0] + e[1] a
  using Elem = std::array<std::uint32_t, 2>;

  // Throws InvalidField unless a^2 + c1 a + c0 is irreducible over GF(p).
  GFp2(std::uint64_t p, std::uint32_t c0, std::uint32_t c1);

  const GFp& base() const { return base_; }
  std::uint32_t p() const { return base_.p(); }
  std::uint32_t c0() const { return c0_; }
  std::uint32_t c1() const { return c1_; }

  Elem zero() const { return {0, 0}; }
  Elem one() const { return {1, 0}; }
  Elem add(const Elem& a, const Elem& b) const {
    return {base_.add(a[0], b[0]), base_.add(a[1], b[1])};
  }
  Elem sub(const Elem& a, const Elem& b) const {
    return {base_.sub(a[0], b[0]), base_.sub(a[1], b[1])};
  }
  Elem neg(const Elem& a) const { return {base_.neg(a[0]), base_.neg(a[1])}; }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return a[0] == 0 && a[1] == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_int(std::int64_t v) const { return {base_.from_int(v), 0}; }

  // Accepts linear polynomials in `a` such as "3a+2", "-a-3", "a", "5".
  Elem parse(const std::string& text) const;
  std::string format(const Elem& e) const;

  friend bool operator==(const GFp2& x, const GFp2& y) {
    return x.base_ == y.base_ && x.c0_ == y.c0_ && x.c1_ == y.c1_;
  }

 private:
  GFp base_;
  std::uint32_t c0_;
  std::uint32_t c1_;
};

class Rationals {
 public:
  using Elem = mpq_class;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_int(std::int64_t v) const { return mpq_class(mpz_class(std::to_string(v))); }

  // "num/den" or an integer; stored in lowest terms.
  Elem parse(const std::string& text) const;
  std::string format(const Elem& a) const { return a.get_str(); }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

// The field a matrix lives over, as written in matrix files.
struct FieldSpec {
  enum class Kind { kPrime, kQuadratic, kRational };
  Kind kind = Kind::kRational;
  std::uint32_t p = 0;
  std::uint32_t c0 = 0;  // modulus a^2 + c1 a + c0 for kQuadratic
  std::uint32_t c1 = 0;

  static FieldSpec prime(std::uint32_t p) { return {Kind::kPrime, p, 0, 0}; }
  static FieldSpec quadratic(std::uint32_t p, std::uint32_t c0,
                             std::uint32_t c1) {
    return {Kind::kQuadratic, p, c0, c1};
  }
  static FieldSpec rational() { return {}; }

  // "GF(7)", "GF(7^2)[a^2+6a+3]", "Q"
  std::string describe() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

template <typename F>
struct Matrix {
  using Elem = typename F::Elem;

  F field;
  int rows = 0;
  int cols = 0;
  std::vector<Elem> data;  // row-major

  Matrix(F f, int r, int c)
      : field(std::move(f)), rows(r), cols(c),
        data(static_cast<std::size_t>(r) * c, field.zero()) {}

  Elem& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const Elem& at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
};

using FieldMatrix =
    std::variant<Matrix<GFp>, Matrix<GFp2>, Matrix<Rationals>>;

FieldSpec spec_of(const GFp& f);
FieldSpec spec_of(const GFp2& f);
FieldSpec spec_of(const Rationals& f);
FieldSpec spec_of(const FieldMatrix& m);
int rows_of(const FieldMatrix& m);
int cols_of(const FieldMatrix& m);

// Builds an all-zero matrix over the described field; validates the spec.
FieldMatrix make_matrix(const FieldSpec& spec, int rows, int cols);
// Parses and stores one entry.
void set_entry(FieldMatrix& m, int r, int c, const std::string& text);
std::string format_entry(const FieldMatrix& m, int r, int c);

}  // namespace dmat

#endif  // DMAT_FIELD_HPP
