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

#include "dmat/field.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "dmat/error.hpp"
#include "dmat/linalg.hpp"
#include "dmat/rng.hpp"

namespace dmat {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kParseError;
}

// Field laws on random triples.
template <typename F, typename Draw>
void check_field_laws(const F& f, Draw draw, int trials) {
  for (int t = 0; t < trials; ++t) {
    const auto a = draw();
    const auto b = draw();
    const auto c = draw();
    ASSERT_TRUE(f.equal(f.add(f.add(a, b), c), f.add(a, f.add(b, c))));
    ASSERT_TRUE(f.equal(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
    ASSERT_TRUE(f.equal(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
    ASSERT_TRUE(f.equal(f.add(a, b), f.add(b, a)));
    ASSERT_TRUE(f.equal(f.mul(a, b), f.mul(b, a)));
    ASSERT_TRUE(f.is_zero(f.add(a, f.neg(a))));
    ASSERT_TRUE(f.equal(f.sub(a, b), f.add(a, f.neg(b))));
    if (!f.is_zero(a)) {
      ASSERT_TRUE(f.equal(f.mul(a, f.inv(a)), f.one()));
    }
  }
}

TEST(PrimeTest, TrialDivision) {
  EXPECT_TRUE(is_prime_u32(2));
  EXPECT_TRUE(is_prime_u32(7));
  EXPECT_TRUE(is_prime_u32(2147483647));
  EXPECT_FALSE(is_prime_u32(1));
  EXPECT_FALSE(is_prime_u32(49));
  EXPECT_FALSE(is_prime_u32(2147483649ULL));
}

TEST(GFpTest, FieldLaws) {
  for (std::uint64_t p : {2ULL, 7ULL, 10007ULL, 2147483647ULL}) {
    GFp f(p);
    CounterRng rng(p, 1);
    check_field_laws(f, [&] { return static_cast<GFp::Elem>(rng.below(p)); }, 2000);
  }
}

TEST(GFpTest, ParseAndFormat) {
  GFp f(7);
  EXPECT_EQ(f.parse("5"), 5u);
  EXPECT_EQ(f.parse("-1"), 6u);
  EXPECT_EQ(f.parse("15"), 1u);
  EXPECT_EQ(f.format(3), "3");
  EXPECT_EQ(f.from_int(-8), 6u);
  EXPECT_EQ(f.pow(3, 6), 1u);
  EXPECT_EQ(code_of([&] { f.parse("x"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { GFp g(9); }), ErrorCode::kInvalidField);
  EXPECT_EQ(code_of([] { GFp g(4294967291ULL); }), ErrorCode::kInvalidField);
}

TEST(GFp2Test, FieldLawsForSeveralModuli) {
  // a^2 + 6a + 3 and a^2 - 3 over GF(7), a^2 + a + 1 over GF(2), a^2 + 1 over
  // GF(10007), where -1 is a non-residue.
  for (auto [p, c0, c1] : std::vector<std::array<std::uint32_t, 3>>{
           {7, 3, 6}, {7, 4, 0}, {2, 1, 1}, {10007, 1, 0}}) {
    GFp2 f(p, c0, c1);
    CounterRng rng(p + c0, 2);
    check_field_laws(
        f,
        [&] {
          return GFp2::Elem{static_cast<std::uint32_t>(rng.below(p)),
                            static_cast<std::uint32_t>(rng.below(p))};
        },
        2000);
  }
}

TEST(GFp2Test, GeneratorSatisfiesModulus) {
  GFp2 f(7, 3, 6);
  const GFp2::Elem a{0, 1};
  // a^2 + 6a + 3 = 0
  const auto v = f.add(f.add(f.mul(a, a), f.mul(f.from_int(6), a)), f.from_int(3));
  EXPECT_TRUE(f.is_zero(v));
  // a generates the multiplicative group of order 48. A root of a^2 - 3
  // only has order 12.
  auto order_of = [](const GFp2& g, GFp2::Elem y) {
    GFp2::Elem x = g.one();
    int order = 0;
    do {
      x = g.mul(x, y);
      ++order;
    } while (!g.equal(x, g.one()));
    return order;
  };
  EXPECT_EQ(order_of(f, a), 48);
  EXPECT_EQ(order_of(GFp2(7, 4, 0), a), 12);
}

TEST(GFp2Test, RejectsReducibleModulus) {
  // a^2 - 2 splits over GF(7) since 3^2 = 2.
  EXPECT_EQ(code_of([] { GFp2 f(7, 5, 0); }), ErrorCode::kInvalidField);
  // a^2 + a splits everywhere.
  EXPECT_EQ(code_of([] { GFp2 f(2, 0, 1); }), ErrorCode::kInvalidField);
}

TEST(GFp2Test, ParseAndFormat) {
  GFp2 f(7, 3, 6);
  EXPECT_EQ(f.parse("3a+2"), (GFp2::Elem{2, 3}));
  EXPECT_EQ(f.parse("-a-3"), (GFp2::Elem{4, 6}));
  EXPECT_EQ(f.parse("a"), (GFp2::Elem{0, 1}));
  EXPECT_EQ(f.parse("5"), (GFp2::Elem{5, 0}));
  EXPECT_EQ(f.parse("2 + 3*a"), (GFp2::Elem{2, 3}));
  EXPECT_EQ(f.parse("-2"), (GFp2::Elem{5, 0}));
  for (const char* text : {"3a+2", "a", "5", "0", "6a"}) {
    EXPECT_EQ(f.parse(f.format(f.parse(text))), f.parse(text)) << text;
  }
  EXPECT_EQ(code_of([&] { f.parse("3b"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([&] { f.parse(""); }), ErrorCode::kParseError);
}

TEST(RationalsTest, FieldLawsAndParsing) {
  Rationals q;
  CounterRng rng(3, 3);
  check_field_laws(
      q,
      [&] {
        mpq_class x(rng.between(-50, 50), rng.between(1, 30));
        x.canonicalize();
        return x;
      },
      2000);
  EXPECT_EQ(q.parse("6/4"), mpq_class(3, 2));
  EXPECT_EQ(q.parse("-7"), mpq_class(-7));
  EXPECT_EQ(q.format(q.parse("6/4")), "3/2");
  EXPECT_EQ(code_of([&] { q.parse("1/0"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([&] { q.parse("1.5"); }), ErrorCode::kParseError);
}

TEST(FieldSpecTest, Describe) {
  EXPECT_EQ(FieldSpec::prime(7).describe(), "GF(7)");
  EXPECT_EQ(FieldSpec::quadratic(7, 3, 6).describe(), "GF(7^2)[a^2+6a+3]");
  EXPECT_EQ(FieldSpec::rational().describe(), "Q");
}

TEST(LinalgTest, RankAndKernelOverGF7) {
  Matrix<GFp> id(GFp(7), 3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  EXPECT_EQ(rank_of(id), 3);
  EXPECT_EQ(kernel_of(id).rows, 0);

  Matrix<GFp> zero(GFp(7), 2, 3);
  EXPECT_EQ(rank_of(zero), 0);
  EXPECT_EQ(kernel_of(zero).rows, 3);
}

TEST(LinalgTest, BareissAgreesWithGaussJordanOverQ) {
  CounterRng rng(5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng.below(5));
    const int cols = 1 + static_cast<int>(rng.below(6));
    Matrix<Rationals> m(Rationals{}, rows, cols);
    for (auto& x : m.data) {
      // Small entries make rank deficiency common.
      x = rng.below(3) == 0 ? mpq_class(0) : mpq_class(rng.between(-2, 2), rng.between(1, 3));
      x.canonicalize();
    }
    if (trial % 4 == 0 && rows > 1) {
      for (int c = 0; c < cols; ++c) m.at(rows - 1, c) = m.at(0, c) * 3;
    }
    const IntMatrix z = clear_column_denominators(m);
    const int r = rank_of(m);
    ASSERT_EQ(bareiss_rank(z), r);
    ASSERT_EQ(rank_mod_mersenne61(z), r);
    const Matrix<Rationals> k = kernel_of(m);
    ASSERT_EQ(k.rows, cols - r);
    ASSERT_TRUE(is_zero_matrix(multiply(m, transpose(k))));
  }
}

TEST(FieldMatrixTest, EntriesRoundTrip) {
  FieldMatrix m = make_matrix(FieldSpec::quadratic(7, 3, 6), 1, 2);
  set_entry(m, 0, 0, "2a+2");
  set_entry(m, 0, 1, "-a+2");
  EXPECT_EQ(format_entry(m, 0, 0), "2a+2");
  EXPECT_EQ(format_entry(m, 0, 1), "6a+2");
  EXPECT_EQ(spec_of(m), FieldSpec::quadratic(7, 3, 6));
  EXPECT_EQ(rows_of(m), 1);
  EXPECT_EQ(cols_of(m), 2);
}

}  // namespace
}  // namespace dmat
