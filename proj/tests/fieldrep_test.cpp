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

#include "dmat/fieldrep.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <utility>
#include <map>
#include <string>
#include <vector>

#include "dmat/derived.hpp"
#include "dmat/error.hpp"
#include "dmat/generators.hpp"
#include "dmat/json_io.hpp"
#include "dmat/linalg.hpp"
#include "dmat/rng.hpp"

namespace dmat {
namespace {

Representation fixture(const std::string& name) {
  return representation_from_json(load_json_file(std::string(DMAT_FIXTURES) + "/" + name));
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kParseError;
}

ElemSet one_based(const char* digits) {
  ElemSet s;
  for (; *digits; ++digits) s.insert(*digits - '1');
  return s;
}

// The column order used for the printed 6 x 15 matrices of the U(3,6)
// example, as supports of the circuit vectors.
std::vector<ElemSet> printed_u36_order() {
  std::vector<ElemSet> out;
  for (const char* s : {"1234", "3456", "2456", "1256", "1356", "1456", "2356", "1235",
                        "1245", "1345", "2345", "1236", "1246", "1346", "2346"}) {
    out.push_back(one_based(s));
  }
  return out;
}

// Canonical circuit index of printed column `col` (1-based).
int canonical_of_printed(const Matroid& u36, int col) {
  return u36.circuit_index(printed_u36_order()[col - 1]);
}

std::map<int, std::size_t> histogram(const Matroid& m) {
  std::map<int, std::size_t> h;
  for (ElemSet c : m.circuits()) ++h[c.size()];
  return h;
}

bool proportional(const Matrix<GFp>& x, int xr, const Matrix<GFp>& y, int yc) {
  // Row xr of x against column yc of y.
  const GFp& f = x.field;
  GFp::Elem ratio = 0;
  for (int i = 0; i < x.cols; ++i) {
    const auto a = x.at(xr, i);
    const auto b = y.at(i, yc);
    if (f.is_zero(a) != f.is_zero(b)) return false;
    if (f.is_zero(a)) continue;
    const auto r = f.mul(b, f.inv(a));
    if (ratio == 0) ratio = r;
    if (r != ratio) return false;
  }
  return ratio != 0;
}

TEST(RankAndKernelTest, Examples) {
  FieldMatrix id = make_matrix(FieldSpec::prime(7), 3, 3);
  for (int i = 0; i < 3; ++i) set_entry(id, i, i, "1");
  RankAndKernel a = rank_and_kernel(id);
  EXPECT_EQ(a.rank, 3);
  EXPECT_EQ(rows_of(a.kernel), 0);

  RankAndKernel z = rank_and_kernel(make_matrix(FieldSpec::rational(), 2, 3));
  EXPECT_EQ(z.rank, 0);
  EXPECT_EQ(rows_of(z.kernel), 3);

  EXPECT_EQ(rank_and_kernel(fixture("q1_f7.json").matrix).rank, 3);
  EXPECT_EQ(rank_and_kernel(fixture("u36_zz.json").matrix).rank, 3);
  EXPECT_EQ(rank_and_kernel(fixture("u36_f49.json").matrix).rank, 3);
}

TEST(MatroidFromMatrixTest, Examples) {
  const Matroid u36 = uniform(3, 6);
  EXPECT_EQ(matroid_from_matrix(random_uniform_rep(3, 6, FieldSpec::prime(10007), 1)), u36);
  EXPECT_EQ(matroid_from_matrix(fixture("k4_gf2.json")), graphic(k4_graph()));
  EXPECT_EQ(matroid_from_matrix(fixture("u36_zz.json")), u36);
  EXPECT_EQ(matroid_from_matrix(fixture("u36_f49.json")), u36);
  EXPECT_EQ(matroid_from_matrix(fixture("q1_f7.json")), u36);
  EXPECT_EQ(matroid_from_matrix(fixture("q2_f7.json")), u36);
}

TEST(MatroidFromMatrixTest, IndependentSetCountMatchesCircuits) {
  const Representation r = fixture("k4_gf2.json");
  const Matroid m = matroid_from_matrix(r);
  std::uint64_t independent = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) independent += m.is_independent(ElemSet(mask));
  EXPECT_EQ(count_independent_sets(r), independent);
  EXPECT_EQ(independent, 64u - count_dependent_sets(m));
}

TEST(CircuitVectorTest, Examples) {
  const Representation u24 = random_uniform_rep(2, 4, FieldSpec::prime(101), 3);
  const Matroid u24_matroid = uniform(2, 4);
  for (ElemSet c : u24_matroid.circuits()) {
    const FieldMatrix v = circuit_vector(u24, c);
    ElemSet support;
    for (int i = 0; i < 4; ++i) {
      if (format_entry(v, 0, i) != "0") support.insert(i);
    }
    EXPECT_EQ(support, c);
  }

  const Representation k4 = fixture("k4_gf2.json");
  const FieldMatrix v = circuit_vector(k4, one_based("1346"));
  std::string row;
  for (int i = 0; i < 6; ++i) row += format_entry(v, 0, i);
  EXPECT_EQ(row, "101101");

  EXPECT_EQ(code_of([&] { circuit_vector(k4, one_based("12")); }), ErrorCode::kNotACircuit);
}

TEST(CircuitVectorTest, NormalizationOverQ) {
  const Representation zz = fixture("u36_zz.json");
  const Matroid u36 = uniform(3, 6);
  for (ElemSet c : u36.circuits()) {
    const FieldMatrix v = circuit_vector(zz, c);
    const auto& m = std::get<Matrix<Rationals>>(v);
    mpz_class g = 0;
    int first = -1;
    for (int i = 0; i < m.cols; ++i) {
      ASSERT_EQ(m.at(0, i).get_den(), 1);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.at(0, i).get_num_mpz_t());
      if (first < 0 && sgn(m.at(0, i)) != 0) first = i;
    }
    EXPECT_EQ(g, 1);
    EXPECT_GT(sgn(m.at(0, first)), 0);
  }
}

TEST(CircuitVectorTest, Q1MatchesPrintedMatrixColumnByColumn) {
  const Matroid u36 = uniform(3, 6);
  for (const auto& [dual, printed] : {std::pair{"q1_f7.json", "delta_q1_f7.json"},
                                      std::pair{"q2_f7.json", "delta_q2_f7.json"}}) {
    const auto vectors = std::get<Matrix<GFp>>(circuit_vector_matrix(fixture(dual), u36));
    const auto shown = std::get<Matrix<GFp>>(fixture(printed).matrix);
    EXPECT_EQ(rank_of(vectors), 3);
    for (int col = 1; col <= 15; ++col) {
      const int k = canonical_of_printed(u36, col);
      ASSERT_GE(k, 0);
      // circuit_vector_matrix has the vectors as columns; transpose to rows.
      EXPECT_TRUE(proportional(transpose(vectors), k, shown, col - 1))
          << dual << " column " << col;
    }
  }
}

TEST(OwDerivedTest, Q1AndQ2CountsAndPrintedTriples) {
  const Matroid u36 = uniform(3, 6);
  const Matroid d1 = ow_derived(fixture("q1_f7.json"));
  const Matroid d2 = ow_derived(fixture("q2_f7.json"));
  EXPECT_EQ(d1.circuit_count(), 751);
  EXPECT_EQ(d2.circuit_count(), 751);
  std::vector<ElemSet> shared;
  std::set_intersection(d1.circuits().begin(), d1.circuits().end(), d2.circuits().begin(),
                        d2.circuits().end(), std::back_inserter(shared),
                        [](ElemSet a, ElemSet b) { return canonical_less(a, b); });
  EXPECT_EQ(shared.size(), 712u);

  auto triple = [&](int a, int b, int c) {
    return ElemSet{canonical_of_printed(u36, a), canonical_of_printed(u36, b),
                   canonical_of_printed(u36, c)};
  };
  auto triangles_only_in = [](const Matroid& x, const Matroid& y) {
    std::vector<ElemSet> out;
    for (ElemSet c : x.circuits()) {
      if (c.size() == 3 && y.circuit_index(c) < 0) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](ElemSet a, ElemSet b) { return canonical_less(a, b); });
    return out;
  };
  std::vector<ElemSet> want1 = {triple(6, 11, 12), triple(3, 8, 14), triple(4, 10, 15)};
  std::vector<ElemSet> want2 = {triple(1, 2, 4), triple(1, 3, 5), triple(2, 8, 13)};
  for (auto* w : {&want1, &want2}) {
    std::sort(w->begin(), w->end(), [](ElemSet a, ElemSet b) { return canonical_less(a, b); });
  }
  EXPECT_EQ(triangles_only_in(d1, d2), want1);
  EXPECT_EQ(triangles_only_in(d2, d1), want2);
}

TEST(OwDerivedTest, PrintedMatricesGiveSameMatroids) {
  // Relabel the printed columns into canonical order and compare.
  const Matroid u36 = uniform(3, 6);
  for (const auto& [dual, printed] : {std::pair{"q1_f7.json", "delta_q1_f7.json"},
                                      std::pair{"q2_f7.json", "delta_q2_f7.json"}}) {
    const Matroid shown = matroid_from_matrix(fixture(printed));
    std::vector<ElemSet> relabeled;
    for (ElemSet c : shown.circuits()) {
      ElemSet r;
      c.for_each([&](int col) { r.insert(canonical_of_printed(u36, col + 1)); });
      relabeled.push_back(r);
    }
    EXPECT_EQ(Matroid::from_circuits(15, relabeled), ow_derived(fixture(dual))) << dual;
  }
}

TEST(OwDerivedTest, F49AndIntegralMatricesGive32252DependentSets) {
  const Matroid d49 = ow_derived(fixture("u36_f49.json"));
  const Matroid dzz = ow_derived(fixture("u36_zz.json"));
  EXPECT_EQ(count_dependent_sets(d49), 32252u);
  EXPECT_EQ(count_dependent_sets(dzz), 32252u);
  const Matroid delta = derive_circuits(uniform(3, 6)).as_matroid();
  EXPECT_EQ(d49, delta);
  EXPECT_EQ(dzz, delta);
}

TEST(OwDerivedTest, RankIsNullityOfBase) {
  for (const char* name : {"q1_f7.json", "u36_zz.json", "k4_gf2.json"}) {
    const Representation r = fixture(name);
    const Matroid base = matroid_from_matrix(r);
    const Matroid d = ow_derived(r);
    EXPECT_EQ(d.rank_profile().rank, base.rank_profile().nullity_of_ground) << name;
  }
}

TEST(LongyearTest, K4GivesFano) {
  const Matroid k4 = graphic(k4_graph());
  const Matroid dl = longyear_derived(k4, fixture("k4_gf2.json"));
  const DerivedResult r = derive_circuits(k4);
  std::vector<ElemSet> lines;
  for (const CircuitSet& t : r.circuits) {
    if (t.size() == 3) lines.push_back(ElemSet(t.words()[0]));
  }
  lines.push_back(ElemSet{k4.circuit_index(one_based("1346")), k4.circuit_index(one_based("1256")),
                          k4.circuit_index(one_based("2345"))});
  EXPECT_EQ(dl, rank3_from_lines(7, lines));
  // Over GF(2) the circuit-vector construction coincides.
  EXPECT_EQ(dl, ow_derived(fixture("k4_gf2.json")));
}

TEST(LongyearTest, Errors) {
  EXPECT_EQ(code_of([] { longyear_derived(q6(), fixture("k4_gf2.json")); }),
            ErrorCode::kRepresentationMismatch);
  EXPECT_EQ(code_of([] { longyear_derived(uniform(3, 6), fixture("q1_f7.json")); }),
            ErrorCode::kInvalidField);
}

TEST(LongyearTest, DirectSumIsBlockDiagonal) {
  // Two triangles glued at nothing: the graph of two disjoint K3.
  Graph g;
  g.vertices = 6;
  g.edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  const Matroid m = graphic(g);
  Representation r{make_matrix(FieldSpec::prime(2), 6, 6), Convention::kPrimal};
  for (int e = 0; e < 6; ++e) {
    set_entry(r.matrix, g.edges[e].first, e, "1");
    set_entry(r.matrix, g.edges[e].second, e, "1");
  }
  const Matroid dl = longyear_derived(m, r);
  EXPECT_EQ(dl.size(), 2);
  EXPECT_TRUE(dl.circuits().empty());
}

TEST(RandomRepTest, DeterministicAndUniform) {
  const Representation a = random_uniform_rep(3, 6, FieldSpec::prime(10007), 42);
  const Representation b = random_uniform_rep(3, 6, FieldSpec::prime(10007), 42);
  EXPECT_EQ(representation_to_json(a), representation_to_json(b));
  EXPECT_NE(representation_to_json(a),
            representation_to_json(random_uniform_rep(3, 6, FieldSpec::prime(10007), 43)));
  EXPECT_EQ(matroid_from_matrix(a), uniform(3, 6));
  EXPECT_EQ(matroid_from_matrix(random_uniform_rep(2, 5, FieldSpec::quadratic(7, 3, 6), 9)),
            uniform(2, 5));
  EXPECT_EQ(code_of([] { random_uniform_rep(3, 6, FieldSpec::prime(2), 1); }),
            ErrorCode::kFieldTooSmall);
}

TEST(RandomRepTest, U26OverQReproducesHistogram) {
  const Matroid d = ow_derived(random_uniform_rep(2, 6, FieldSpec::rational(), 1));
  EXPECT_EQ(histogram(d), (std::map<int, std::size_t>{{3, 60}, {4, 510}, {5, 3432}}));
}

TEST(WeakOrderTest, Examples) {
  EXPECT_EQ(weak_order_compare(non_fano(), fano()), WeakOrder::kGreaterOrEqual);
  EXPECT_EQ(weak_order_compare(fano(), non_fano()), WeakOrder::kLessOrEqual);
  EXPECT_EQ(weak_order_compare(q6(), q6()), WeakOrder::kEqual);
  const Matroid delta = derive_circuits(uniform(3, 6)).as_matroid();
  EXPECT_EQ(weak_order_compare(delta, ow_derived(fixture("q1_f7.json"))),
            WeakOrder::kGreaterOrEqual);
  EXPECT_EQ(weak_order_compare(ow_derived(fixture("q1_f7.json")),
                               ow_derived(fixture("q2_f7.json"))),
            WeakOrder::kIncomparable);
  EXPECT_EQ(code_of([] { weak_order_compare(q6(), fano()); }), ErrorCode::kGroundSizeMismatch);
  EXPECT_EQ(weak_order_name(WeakOrder::kGreaterOrEqual), "greater-or-equal");
}

TEST(CountDependentSetsTest, Examples) {
  EXPECT_EQ(count_dependent_sets(uniform(2, 4)), 5u);
  EXPECT_EQ(count_dependent_sets(Matroid::from_circuits(5, {})), 0u);
}

}  // namespace
}  // namespace dmat
