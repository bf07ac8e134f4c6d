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

// The combinatorial derived matroid of a circuit-presented matroid.
//
// The ground set of the derived matroid is the canonical circuit list of the
// base matroid, so a CircuitSet here is a set of positions in that list.
// Three independent engines compute its circuits:
//   derive_circuits            E_0 = min A_0, E_{i+1} = min eps(E_i)
//   b_sequence                 B_0 = min A_0, B_{i+1} = eps(B_i), min of union;
//                              a pair is blocked when its intersection is in
//                              up(B_i), since B_i is not an antichain
//   derive_dependents_explicit A_0 as a dense bitmap, A_{i+1} = up(eps(A_i))
// where A_0 = {A : |A| > nullity(supp A)}.
//
// All three use the same observation to stay finite in practice: nullity of
// any support is at most n(M), so every family of more than n(M) circuits is
// already in A_0. Products of the extension step that large add nothing.

#ifndef DMAT_DERIVED_HPP
#define DMAT_DERIVED_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmat/circuit_set.hpp"
#include "dmat/families.hpp"
#include "dmat/matroid.hpp"

namespace dmat {

struct Limits {
  int max_iterations = 32;
  // Members of E_i larger than this are dropped and the run is marked
  // incomplete. 0 selects n(M) + 2, which no circuit of the derived matroid
  // can reach.
  int max_set_size = 0;
  // Cap on subsets examined by a0_minimal and on family sizes in b_sequence.
  std::uint64_t subset_budget = 200'000'000;
};

struct IterationRecord {
  int index = 0;
  std::size_t size = 0;      // |E_i|
  std::size_t new_sets = 0;  // members of E_i absent from E_{i-1}
  double wall_seconds = 0;
};

struct DerivationTrace {
  std::string engine;
  std::vector<IterationRecord> iterations;
  int max_iterations = 0;
  int max_set_size = 0;
  bool fixpoint = false;
};

// A circuit of depth d > 0 equals (b1 | b2) - {c} with b1, b2 of smaller depth.
struct Witness {
  CircuitSet b1;
  CircuitSet b2;
  int c = -1;
};

struct DerivedResult {
  Matroid base;
  int universe = 0;  // number of circuits of `base`
  Antichain circuits;
  std::vector<int> depths;  // aligned with circuits.members()
  std::vector<std::optional<Witness>> witnesses;  // empty for depth 0
  DerivationTrace trace;
  bool complete = false;

  int depth_of(const CircuitSet& s) const;
  // The derived matroid as a circuit-presented matroid; needs universe <= 64.
  Matroid as_matroid() const;
};

// Name of a circuit as a derived-matroid element: its base labels joined,
// with '-' between them unless every label is one character.
std::string circuit_label(const Matroid& base, ElemSet circuit);

// supp(A) as a subset of the base ground set.
ElemSet support_of(const Matroid& m, const CircuitSet& a);
// |A| > nullity(supp A).
bool in_a0(const Matroid& m, const CircuitSet& a);

// Minimal members of A_0, found level by level up to size n(M) + 1.
Antichain a0_minimal(const Matroid& m,
                     std::uint64_t subset_budget = Limits{}.subset_budget);

DerivedResult derive_circuits(const Matroid& m, const Limits& limits = {});

// The full dependent family A as a dense bitmap; needs at most 25 circuits.
SubsetBitmap derive_dependents_explicit(const Matroid& m);

Antichain b_sequence(const Matroid& m, const Limits& limits = {});

enum class Dependence { kDependent, kIndependent, kUnknown };
std::string_view dependence_name(Dependence d);
Dependence is_dependent_in_derived(const DerivedResult& r, const CircuitSet& a);

struct DerivedStats {
  std::map<int, std::size_t> size_histogram;
  std::map<int, std::size_t> depth_histogram;
  int rank = 0;
  int base_nullity = 0;  // n(M) = |E| - r(M)
  int rank_gap = 0;      // base_nullity - rank
  int components = 0;
  bool connected = false;
  int elements_in_triangles = 0;
  bool every_element_in_triangle = false;
  // Whether the fundamental circuits of the greedy basis of M form a basis of
  // the derived matroid. Reported, not asserted.
  bool fundamental_circuits_form_basis = false;
  bool complete = false;
};

DerivedStats derived_stats(const DerivedResult& r);

// Checks the hanging-element lemma on one instance: if S is not in A_0 and
// circuit c has an element outside supp(S), then S + c is not in A_0 either.
// Returns whether the hypotheses hold; throws std::logic_error if they hold
// and the conclusion fails.
bool hanging_extension_check(const Matroid& m, const CircuitSet& s, int c);

// Replays a witness: c lies in both parts and (b1 | b2) - {c} == target.
bool witness_replays(const Witness& w, const CircuitSet& target);

// Every distinct product (A1 | A2) - {C} of one extension step applied to the
// full A_0, restricted to products of at most n(M) circuits (larger ones are
// in A_0 anyway). Products are grouped by the sizes of the two parents.
struct ProductClass {
  int size1 = 0;  // |A1| <= |A2|
  int size2 = 0;
  int product_size = 0;
  std::vector<CircuitSet> products;  // canonical order
  std::vector<CircuitSet> new_products;  // those outside A_0
};
struct EpsilonCensus {
  std::map<int, std::size_t> a0_by_size;  // A_0 members of size <= n(M)
  std::vector<ProductClass> classes;
  const ProductClass* find(int size1, int size2, int product_size) const;
};
EpsilonCensus epsilon_census_of_a0(
    const Matroid& m, std::uint64_t subset_budget = Limits{}.subset_budget);

}  // namespace dmat

#endif  // DMAT_DERIVED_HPP
