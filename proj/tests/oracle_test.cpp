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

#include "dmat/oracle.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "dmat/derived.hpp"
#include "dmat/error.hpp"
#include "dmat/generators.hpp"
#include "dmat/json_io.hpp"

namespace dmat {
namespace {

TEST(CircuitAxiomsTest, Examples) {
  // U(1,3)
  EXPECT_TRUE(check_circuit_axioms({{0, 1}, {1, 2}, {0, 2}}, 3).passed);

  const OracleReport nested = check_circuit_axioms({{0, 1}, {0, 1, 2}}, 3);
  EXPECT_FALSE(nested.passed);
  ASSERT_FALSE(nested.witnesses.empty());
  EXPECT_EQ(nested.witnesses[0].axiom, "C2");

  const OracleReport empty = check_circuit_axioms(std::vector<CircuitSet>{CircuitSet{}}, 3);
  EXPECT_FALSE(empty.passed);
  EXPECT_EQ(empty.witnesses[0].axiom, "C1");

  // 012 and 013 share 0 and 1; removing 0 leaves 123, which holds no circuit.
  const OracleReport exchange = check_circuit_axioms({{0, 1, 2}, {0, 1, 3}}, 4);
  EXPECT_FALSE(exchange.passed);
  EXPECT_EQ(exchange.witnesses[0].axiom, "C3");
  EXPECT_GE(exchange.witnesses[0].element, 0);
  EXPECT_EQ(report_to_json(exchange)["passed"], false);
}

TEST(CircuitAxiomsTest, DerivedCircuitsOfK4Pass) {
  const DerivedResult r = derive_circuits(graphic(k4_graph()));
  EXPECT_TRUE(check_circuit_axioms(r.circuits.members(), r.universe).passed);
}

TEST(CircuitAxiomsTest, WitnessesAreCapped) {
  std::vector<CircuitSet> bad;
  for (int i = 0; i < 20; ++i) bad.push_back({i, i + 1, i + 2});
  const OracleReport r = check_circuit_axioms(bad, 22);
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.violations, 8u);
  EXPECT_EQ(r.witnesses.size(), 8u);
}

TEST(DependentAxiomsTest, Examples) {
  const Matroid k4 = graphic(k4_graph());
  EXPECT_TRUE(check_dependent_axioms(derive_dependents_explicit(k4).to_family(), 7).passed);
  EXPECT_TRUE(check_dependent_axioms(Family{}, 5).passed);

  // Upward closure of {01, 12} in a universe of 3 lacks {0, 2}, the D3
  // completion of the pair at element 1.
  Family up{{0, 1}, {1, 2}, {0, 1, 2}};
  const OracleReport r = check_dependent_axioms(up, 3);
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].axiom, "D3");
  EXPECT_EQ(r.witnesses[0].element, 1);

  Family not_closed{{0, 1}};
  const OracleReport d2 = check_dependent_axioms(not_closed, 3);
  EXPECT_FALSE(d2.passed);
  EXPECT_EQ(d2.witnesses[0].axiom, "D2");

  Family with_empty{CircuitSet{}};
  EXPECT_FALSE(check_dependent_axioms(with_empty, 2).passed);
}

TEST(DependentAxiomsTest, Errors) {
  try {
    check_dependent_axioms(Family{}, 16);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUniverseTooLarge);
  }
  try {
    check_dependent_axioms(Family{{7}}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kElementOutOfRange);
  }
}

TEST(BruteRankTest, Examples) {
  const Matroid v = vamos();
  EXPECT_EQ(brute_rank(v, ElemSet{0, 1, 2, 3}), 3);
  EXPECT_EQ(brute_rank(v, ElemSet{}), 0);
  EXPECT_EQ(brute_rank(v, v.ground()), 4);
  EXPECT_EQ(brute_rank(uniform(3, 6), ElemSet{0, 2, 4, 5}), 3);
}

TEST(CrossCheckTest, EnginesAgree) {
  for (const Matroid& m : {graphic(k4_graph()), uniform(2, 5), uniform(2, 4), uniform(3, 5),
                           q6(), uniform(4, 7)}) {
    const OracleReport r = cross_check_derivation(m);
    EXPECT_TRUE(r.passed) << report_to_json(r).dump();
  }
}

TEST(CrossCheckTest, TooManyCircuits) {
  try {
    cross_check_derivation(uniform(3, 7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUniverseTooLarge);
  }
}

TEST(CrossCheckTest, K4HasOnlyDepthZero) {
  const DerivedResult r = derive_circuits(graphic(k4_graph()));
  for (int d : r.depths) EXPECT_EQ(d, 0);
}

}  // namespace
}  // namespace dmat
