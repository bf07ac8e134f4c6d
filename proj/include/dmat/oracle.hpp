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

// Brute-force validators. They enumerate subsets on their own and only read
// the outputs of the engines they check.

#ifndef DMAT_ORACLE_HPP
#define DMAT_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dmat/circuit_set.hpp"
#include "dmat/elem_set.hpp"
#include "dmat/families.hpp"
#include "dmat/json_io.hpp"
#include "dmat/matroid.hpp"

namespace dmat {

// For C3 and D3: `a`, `b` and the element; for C2 and D2 `a` is contained in
// (or extended to) `b`; for C1 and D1 only `a` is set.
struct AxiomWitness {
  std::string axiom;
  CircuitSet a;
  CircuitSet b;
  int element = -1;
};

struct OracleReport {
  std::string check;
  bool passed = true;
  std::size_t violations = 0;
  std::vector<AxiomWitness> witnesses;  // the first few violations
  std::vector<std::string> notes;
};

Json report_to_json(const OracleReport& r);

// Pairwise scan of C1, C2, C3 on a list of sets over {0..universe-1}.
OracleReport check_circuit_axioms(const std::vector<CircuitSet>& circuits,
                                  int universe);
OracleReport check_circuit_axioms(const Matroid& m);

// Exhaustive D1, D2, D3 on a family over at most 15 elements.
OracleReport check_dependent_axioms(const Family& f, int universe);

// max |T| over subsets T of S containing no circuit; |S| <= 20.
int brute_rank(const Matroid& m, ElemSet s);

// Runs the explicit, B-sequence and E-iteration engines and requires the
// same circuits from all three; replays every witness. Needs at most 25
// circuits. Throws EngineDisagreement naming the first differing set.
OracleReport cross_check_derivation(const Matroid& m);

}  // namespace dmat

#endif  // DMAT_ORACLE_HPP
