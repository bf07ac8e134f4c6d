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

#include "dmat/generators.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dmat/error.hpp"
#include "dmat/json_io.hpp"
#include "dmat/oracle.hpp"

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

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(UniformTest, CircuitsAreAllKPlusOneSets) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{0, 3}, {2, 4}, {3, 6}, {4, 7}, {5, 5}}) {
    const Matroid m = uniform(k, n);
    EXPECT_EQ(static_cast<std::uint64_t>(m.circuit_count()), k < n ? binomial(n, k + 1) : 0u);
    for (ElemSet c : m.circuits()) EXPECT_EQ(c.size(), k + 1);
    EXPECT_EQ(m.rank_profile().rank, k);
  }
  EXPECT_EQ(code_of([] { uniform(2, 65); }), ErrorCode::kGroundSetTooLarge);
  EXPECT_EQ(code_of([] { uniform(4, 3); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { uniform(-1, 3); }), ErrorCode::kParseError);
}

TEST(GraphicTest, SmallGraphs) {
  Graph triangle{3, {{0, 1}, {1, 2}, {0, 2}}, {}};
  EXPECT_EQ(graphic(triangle).circuits(), (std::vector<ElemSet>{ElemSet{0, 1, 2}}));

  Graph tree{4, {{0, 1}, {1, 2}, {1, 3}}, {}};
  EXPECT_TRUE(graphic(tree).circuits().empty());

  Graph loop_and_parallel{2, {{0, 0}, {0, 1}, {1, 0}}, {}};
  EXPECT_EQ(graphic(loop_and_parallel).circuits(),
            (std::vector<ElemSet>{ElemSet{0}, ElemSet{1, 2}}));

  const Matroid k4 = graphic(k4_graph());
  EXPECT_EQ(k4.size(), 6);
  EXPECT_EQ(k4.circuit_count(), 7);  // 4 triangles, 3 squares
  EXPECT_EQ(k4.rank_profile().rank, 3);
  EXPECT_EQ(k4.labels(), (std::vector<std::string>{"1", "2", "3", "4", "5", "6"}));
  EXPECT_TRUE(check_circuit_axioms(k4).passed);
}

TEST(GraphicTest, CompleteGraphK5) {
  Graph k5{5, {}, {}};
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) k5.edges.emplace_back(a, b);
  }
  const Matroid m = graphic(k5);
  // Cycles of K5: 10 triangles, 15 four-cycles, 12 five-cycles.
  EXPECT_EQ(m.circuit_count(), 37);
  EXPECT_EQ(m.rank_profile().rank, 4);
  EXPECT_TRUE(check_circuit_axioms(m).passed);
}

TEST(GraphicTest, Errors) {
  Graph bad{2, {{0, 2}}, {}};
  EXPECT_EQ(code_of([&] { graphic(bad); }), ErrorCode::kElementOutOfRange);
  Graph labels{2, {{0, 1}}, {"x", "y"}};
  EXPECT_EQ(code_of([&] { graphic(labels); }), ErrorCode::kParseError);
  Graph k6{6, {}, {}};
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) k6.edges.emplace_back(a, b);
  }
  EXPECT_EQ(code_of([&] { graphic(k6, 10); }), ErrorCode::kCombinatorialBudgetExceeded);
}

TEST(NamedMatroidsTest, Vamos) {
  const Matroid v = vamos();
  EXPECT_EQ(v.size(), 8);
  EXPECT_EQ(v.circuit_count(), 41);
  EXPECT_EQ(v.rank_profile().rank, 4);
  EXPECT_EQ(v.rank_profile().nullity_of_ground, 4);
  int fours = 0;
  for (ElemSet c : v.circuits()) fours += c.size() == 4;
  EXPECT_EQ(fours, 5);
  EXPECT_TRUE(check_circuit_axioms(v).passed);
  EXPECT_EQ(brute_rank(v, ElemSet{0, 1, 2, 3}), 3);
  EXPECT_EQ(v.label_of(0), "a");
}

TEST(NamedMatroidsTest, Q6FanoNonFano) {
  const Matroid q = q6();
  EXPECT_EQ(q.circuit_count(), 11);
  EXPECT_EQ(q.rank_profile().rank, 3);
  EXPECT_TRUE(check_circuit_axioms(q).passed);

  const Matroid f = fano();
  const Matroid nf = non_fano();
  EXPECT_EQ(f.circuit_count(), 7 + 7);  // lines and line complements
  EXPECT_TRUE(check_circuit_axioms(f).passed);
  EXPECT_TRUE(check_circuit_axioms(nf).passed);
  const ElemSet line246{1, 3, 5};
  EXPECT_GE(f.circuit_index(line246), 0);
  EXPECT_LT(nf.circuit_index(line246), 0);
}

TEST(Rank3FromLinesTest, Errors) {
  EXPECT_EQ(code_of([] { rank3_from_lines(5, {ElemSet{0, 1}}); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { rank3_from_lines(5, {ElemSet{0, 1, 2}, ElemSet{0, 1, 3}}); }),
            ErrorCode::kExchangeFails);
}

TEST(JsonRoundTripTest, MatroidsAndGraphs) {
  for (const Matroid& m : {uniform(2, 5), vamos(), q6(), graphic(k4_graph())}) {
    const Json j = matroid_to_json(m);
    const Matroid back = matroid_from_json(j, true);
    EXPECT_EQ(back, m);
    EXPECT_EQ(back.labels(), m.labels());
    EXPECT_EQ(matroid_to_json(back).dump(), j.dump());
  }
  const Graph g = k4_graph();
  EXPECT_EQ(graph_to_json(graph_from_json(graph_to_json(g))).dump(), graph_to_json(g).dump());

  const std::string path = ::testing::TempDir() + "/vamos_roundtrip.json";
  save_matroid(vamos(), path);
  EXPECT_EQ(load_matroid(path, true), vamos());
  std::remove(path.c_str());
}

TEST(JsonRoundTripTest, FixtureFilesMatchGenerators) {
  const std::string dir = DMAT_FIXTURES;
  EXPECT_EQ(load_matroid(dir + "/vamos.json", true), vamos());
  EXPECT_EQ(load_matroid(dir + "/q6.json", true), q6());
  EXPECT_EQ(load_matroid(dir + "/k4.json", true), graphic(k4_graph()));
  EXPECT_EQ(graphic(graph_from_json(load_json_file(dir + "/k4_graph.json"))),
            graphic(k4_graph()));
}

TEST(JsonErrorsTest, MalformedAndInvalidInput) {
  try {
    parse_json("{\"n\": 3,\n \"circuits\": [", "m.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("m.json:2:"), std::string::npos) << e.what();
  }
  // {0,1} inside {0,1,2}
  const Json nested = parse_json(R"({"n": 3, "circuits": [[0, 1], [0, 1, 2]]})", "t");
  EXPECT_EQ(code_of([&] { matroid_from_json(nested); }), ErrorCode::kComparableCircuits);
  const Json out_of_range = parse_json(R"({"n": 2, "circuits": [[0, 5]]})", "t");
  EXPECT_EQ(code_of([&] { matroid_from_json(out_of_range); }), ErrorCode::kElementOutOfRange);
  const Json no_exchange = parse_json(R"({"n": 4, "circuits": [[0, 1, 2], [0, 1, 3]]})", "t");
  EXPECT_EQ(code_of([&] { matroid_from_json(no_exchange, true); }), ErrorCode::kExchangeFails);
  const Json missing = parse_json(R"({"circuits": []})", "t");
  EXPECT_EQ(code_of([&] { matroid_from_json(missing); }), ErrorCode::kParseError);
}

}  // namespace
}  // namespace dmat
