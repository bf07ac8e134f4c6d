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

#include "dmat/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "dmat/json_io.hpp"

namespace dmat {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return parse_json(out, "stdout"); }
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) { return std::string(DMAT_FIXTURES) + "/" + name; }

TEST(CliTest, GenAndDeriveThroughStdin) {
  const Result gen = call({"gen", "uniform", "3", "6"});
  ASSERT_EQ(gen.code, kExitOk) << gen.err;
  const Result d = call({"derive", "-", "--stats"}, gen.out);
  ASSERT_EQ(d.code, kExitOk) << d.err;
  const Json j = d.json();
  EXPECT_EQ(j["complete"], true);
  EXPECT_EQ(j["histogram"].dump(), R"([{"size":3,"count":60},{"size":4,"count":735}])");
  EXPECT_EQ(j["stats"]["dependent_sets"], 32252);
  EXPECT_EQ(j["universe"], 15);

  const Result csv = call({"derive", "-", "--csv"}, gen.out);
  EXPECT_EQ(csv.out, "size,count\n3,60\n4,735\n");
}

TEST(CliTest, DeriveK4LabelsAndNoSets) {
  const Result d = call({"derive", fixture("k4.json"), "--no-sets"});
  ASSERT_EQ(d.code, kExitOk) << d.err;
  const Json j = d.json();
  EXPECT_FALSE(j.contains("circuits"));
  EXPECT_EQ(j["element_labels"][0], "124");
  EXPECT_EQ(j["trace"]["fixpoint"], true);
  EXPECT_FALSE(j["trace"]["iterations"][0].contains("wall_seconds"));
  const Result timed = call({"derive", fixture("k4.json"), "--timing"});
  EXPECT_TRUE(timed.json()["trace"]["iterations"][0].contains("wall_seconds"));
}

TEST(CliTest, DeriveBudgetExhaustionIsExitThree) {
  const Result d = call({"derive", fixture("q6.json"), "--limits", "iter=0"});
  EXPECT_EQ(d.code, kExitBudget);
  EXPECT_EQ(d.json()["complete"], false);
}

TEST(CliTest, VamosOneIterationIncludesCensus) {
  const Result d =
      call({"derive", fixture("vamos.json"), "--limits", "iter=1", "--no-sets"});
  EXPECT_EQ(d.code, kExitBudget);
  const Json j = d.json();
  ASSERT_TRUE(j.contains("epsilon_census"));
  EXPECT_EQ(j["trace"]["iterations"][1]["new_sets"], 373);
}

TEST(CliTest, CountDependents) {
  const Result m = call({"count-dependents", fixture("k4.json")});
  ASSERT_EQ(m.code, kExitOk) << m.err;
  EXPECT_EQ(m.json()["dependent_sets"], 70);
  const Result zz = call({"count-dependents", fixture("u36_zz.json")});
  ASSERT_EQ(zz.code, kExitOk) << zz.err;
  EXPECT_EQ(zz.json()["dependent_sets"], 32252);
  EXPECT_EQ(zz.json()["source"], "circuit-vectors");
}

TEST(CliTest, OwDeriveAndCompare) {
  const Result a = call({"ow-derive", fixture("q1_f7.json"), "--csv"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out.substr(0, 11), "size,count\n");

  const std::string path = ::testing::TempDir() + "/q1_derived.json";
  ASSERT_EQ(call({"ow-derive", fixture("q1_f7.json"), "-o", path}).code, kExitOk);
  const Result c = call({"compare", path, fixture("q2_f7.json")});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  const Json j = c.json();
  EXPECT_EQ(j["verdict"], "incomparable");
  EXPECT_EQ(j["circuits_a"], 751);
  EXPECT_EQ(j["shared"], 712);
  EXPECT_EQ(j["only_in_a"]["count"], 39);
  EXPECT_EQ(j["only_in_b"]["count"], 39);
  EXPECT_EQ(j["only_in_a"]["histogram"].dump(),
            R"([{"size":3,"count":3},{"size":4,"count":36}])");
  std::remove(path.c_str());
}

TEST(CliTest, LongyearAndCompareGiveGreaterOrEqual) {
  const Result l = call({"longyear", fixture("k4.json"), fixture("k4_gf2.json")});
  ASSERT_EQ(l.code, kExitOk) << l.err;
  const std::string path = ::testing::TempDir() + "/k4_longyear.json";
  ASSERT_EQ(call({"longyear", fixture("k4.json"), fixture("k4_gf2.json"), "-o", path}).code,
            kExitOk);
  const Result gen = call({"derive", fixture("k4.json")});
  // Compare the combinatorial derived matroid with the binary one.
  const std::string dpath = ::testing::TempDir() + "/k4_delta.json";
  {
    Json d = gen.json();
    Json m;
    m["n"] = d["universe"];
    Json circuits = Json::array();
    for (const Json& c : d["circuits"]) circuits.push_back(c["set"]);
    m["circuits"] = circuits;
    write_file(dpath, m.dump());
  }
  const Result c = call({"compare", dpath, path});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_EQ(c.json()["verdict"], "greater-or-equal");
  // Only the extra line is new; the four-sets through it stop being circuits.
  EXPECT_EQ(c.json()["only_in_b"]["count"], 1);
  std::remove(path.c_str());
  std::remove(dpath.c_str());
}

TEST(CliTest, RandomRepIsDeterministicAndNeedsSeed) {
  const Result a = call({"random-rep", "3", "6", "--field", "10007", "--seed", "5"});
  const Result b = call({"random-rep", "3", "6", "--field", "10007", "--seed", "5"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["seed"], 5);
  EXPECT_EQ(call({"random-rep", "3", "6", "--field", "7^2", "--seed", "1"}).code, kExitOk);
  EXPECT_EQ(call({"random-rep", "3", "6"}).code, kExitUsage);
  EXPECT_EQ(call({"random-rep", "3", "6", "--field", "2", "--seed", "1"}).code,
            kExitValidation);

  const Result r = call({"random-rep", "2", "5", "--field", "Q", "--seed", "9"});
  const Result d = call({"ow-derive", "-"}, r.out);
  ASSERT_EQ(d.code, kExitOk) << d.err;
  EXPECT_EQ(d.json()["base"]["circuits"].size(), 10u);
}

TEST(CliTest, ValidateReportsAndExitCodes) {
  const Result ok = call({"validate", fixture("q6.json")});
  EXPECT_EQ(ok.code, kExitOk) << ok.out;
  EXPECT_EQ(ok.json()["passed"], true);

  const Result bad = call({"validate", "-"}, R"({"n": 3, "circuits": [[0, 1], [0, 1, 2]]})");
  EXPECT_EQ(bad.code, kExitValidation);
  EXPECT_EQ(bad.json()["passed"], false);

  const Result anti = call({"validate", "-"}, R"({"universe": 3, "sets": [[0, 1], [1, 2]]})");
  EXPECT_EQ(anti.code, kExitValidation);

  EXPECT_EQ(call({"validate", fixture("k4_gf2.json")}).code, kExitOk);
}

TEST(CliTest, UsageAndInputErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"gen", "uniform", "3"}).code, kExitUsage);
  EXPECT_EQ(call({"gen", "tesseract"}).code, kExitUsage);
  EXPECT_EQ(call({"derive", fixture("k4.json"), "--limits", "iters=3"}).code, kExitUsage);
  const Result malformed = call({"derive", "-"}, "{\"n\": 3,");
  EXPECT_EQ(malformed.code, kExitValidation);
  EXPECT_NE(malformed.err.find("<stdin>:"), std::string::npos) << malformed.err;
  EXPECT_EQ(call({"derive", "/nonexistent/m.json"}).code, kExitValidation);
  const std::string q6_text = call({"gen", "q6"}).out;
  EXPECT_EQ(call({"compare", "-", "-"}, q6_text).code, kExitUsage);
}

TEST(CliTest, OutputIsByteIdenticalAcrossRuns) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"derive", fixture("q6.json"), "--stats"},
        std::vector<std::string>{"ow-derive", fixture("u36_f49.json")},
        std::vector<std::string>{"gen", "vamos"}}) {
    EXPECT_EQ(call(args).out, call(args).out);
  }
}

}  // namespace
}  // namespace dmat
