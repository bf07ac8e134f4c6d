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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dmat/derived.hpp"
#include "dmat/error.hpp"

namespace dmat {
namespace {

constexpr std::size_t kMaxWitnesses = 8;

void record(OracleReport& r, AxiomWitness w) {
  r.passed = false;
  ++r.violations;
  if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(w));
}

CircuitSet from_mask(std::uint64_t mask) { return CircuitSet::from_word(mask); }

std::uint64_t to_mask(const CircuitSet& s) {
  return s.words().empty() ? 0 : s.words()[0];
}

// Plain scan; no index structures shared with the engines.
bool contains_member(const std::vector<CircuitSet>& sets, const CircuitSet& x) {
  for (const CircuitSet& s : sets) {
    if (s.is_subset_of(x)) return true;
  }
  return false;
}

bool independent_by_scan(const Matroid& m, ElemSet t) {
  for (ElemSet c : m.circuits()) {
    if (c.is_subset_of(t)) return false;
  }
  return true;
}

std::string describe(const CircuitSet& s) { return to_string(s); }

void compare_engines(const std::vector<CircuitSet>& a, const char* name_a,
                     const std::vector<CircuitSet>& b, const char* name_b) {
  std::vector<CircuitSet> only_a;
  std::vector<CircuitSet> only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(only_a), CanonicalLess{});
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                      std::back_inserter(only_b), CanonicalLess{});
  if (only_a.empty() && only_b.empty()) return;
  const bool first_in_a =
      !only_a.empty() && (only_b.empty() || canonical_less(only_a[0], only_b[0]));
  const CircuitSet& first = first_in_a ? only_a[0] : only_b[0];
  throw Error(ErrorCode::kEngineDisagreement,
              std::string(first_in_a ? name_a : name_b) + " has circuit " +
                  describe(first) + " missing from " +
                  (first_in_a ? name_b : name_a) + " (" +
                  std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                  " circuits)");
}

}  // namespace

Json report_to_json(const OracleReport& r) {
  Json j;
  j["check"] = r.check;
  j["passed"] = r.passed;
  j["violations"] = r.violations;
  Json ws = Json::array();
  for (const AxiomWitness& w : r.witnesses) {
    Json x{{"axiom", w.axiom}, {"a", to_string(w.a)}};
    if (!w.b.empty() || w.axiom == "C3" || w.axiom == "D3") x["b"] = to_string(w.b);
    if (w.element >= 0) x["element"] = w.element;
    ws.push_back(std::move(x));
  }
  j["witnesses"] = std::move(ws);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

OracleReport check_circuit_axioms(const std::vector<CircuitSet>& input,
                                  int universe) {
  OracleReport r;
  r.check = "circuit-axioms";
  std::vector<CircuitSet> circuits = input;
  std::sort(circuits.begin(), circuits.end(), CanonicalLess{});
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());

  for (const CircuitSet& c : circuits) {
    if (c.empty()) record(r, {"C1", c, {}, -1});
    if (!c.empty() && c.span() > universe) {
      r.notes.push_back("set " + describe(c) + " leaves the universe");
      r.passed = false;
    }
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i != j && circuits[i].is_subset_of(circuits[j])) {
        record(r, {"C2", circuits[i], circuits[j], -1});
      }
    }
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      const CircuitSet common = circuits[i] & circuits[j];
      const CircuitSet joined = circuits[i] | circuits[j];
      common.for_each([&](int e) {
        if (!contains_member(circuits, joined.without(e))) {
          record(r, {"C3", circuits[i], circuits[j], e});
        }
      });
    }
  }
  return r;
}

OracleReport check_circuit_axioms(const Matroid& m) {
  std::vector<CircuitSet> sets;
  for (ElemSet c : m.circuits()) sets.push_back(CircuitSet::from_word(c.bits()));
  return check_circuit_axioms(sets, m.size());
}

OracleReport check_dependent_axioms(const Family& f, int universe) {
  if (universe < 0 || universe > 15) {
    throw Error(ErrorCode::kUniverseTooLarge,
                "dependent-axiom check needs a universe of at most 15, got " +
                    std::to_string(universe));
  }
  OracleReport r;
  r.check = "dependent-axioms";
  const std::uint64_t full = (std::uint64_t{1} << universe) - 1;
  std::vector<char> in(full + 1, 0);
  std::vector<std::uint64_t> members;
  for (const CircuitSet& s : f) {
    if (!s.empty() && s.span() > universe) {
      throw Error(ErrorCode::kElementOutOfRange,
                  "set " + describe(s) + " leaves the universe of size " +
                      std::to_string(universe));
    }
    in[to_mask(s)] = 1;
    members.push_back(to_mask(s));
  }
  std::sort(members.begin(), members.end());

  if (in[0]) record(r, {"D1", CircuitSet{}, {}, -1});
  for (std::uint64_t d : members) {
    for (int e = 0; e < universe; ++e) {
      const std::uint64_t up = d | (std::uint64_t{1} << e);
      if (up != d && !in[up]) record(r, {"D2", from_mask(d), from_mask(up), e});
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const std::uint64_t d1 = members[i];
      const std::uint64_t d2 = members[j];
      const std::uint64_t common = d1 & d2;
      if (in[common]) continue;
      for (std::uint64_t b = common; b != 0; b &= b - 1) {
        const int e = std::countr_zero(b);
        if (!in[(d1 | d2) & ~(std::uint64_t{1} << e)]) {
          record(r, {"D3", from_mask(d1), from_mask(d2), e});
        }
      }
    }
  }
  return r;
}

int brute_rank(const Matroid& m, ElemSet s) {
  if (s.size() > 20) {
    throw Error(ErrorCode::kUniverseTooLarge,
                "brute_rank needs |S| <= 20, got " + std::to_string(s.size()));
  }
  const std::vector<int> elems = s.elements();
  const int k = static_cast<int>(elems.size());
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    ElemSet t;
    for (int i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) t.insert(elems[i]);
    }
    if (independent_by_scan(m, t)) best = size;
  }
  return best;
}

OracleReport cross_check_derivation(const Matroid& m) {
  if (m.circuit_count() > 25) {
    throw Error(ErrorCode::kUniverseTooLarge,
                "cross-check needs at most 25 circuits, got " +
                    std::to_string(m.circuit_count()));
  }
  OracleReport r;
  r.check = "engine-agreement";

  const Antichain explicit_circuits = derive_dependents_explicit(m).minimal_members();
  const Antichain b = b_sequence(m);
  const DerivedResult e = derive_circuits(m);
  if (!e.complete) {
    throw Error(ErrorCode::kEngineDisagreement,
                "E-iteration did not reach a fixpoint within its limits");
  }
  compare_engines(explicit_circuits.members(), "A-explicit", b.members(), "B-sequence");
  compare_engines(explicit_circuits.members(), "A-explicit", e.circuits.members(),
                  "E-iteration");

  const std::vector<CircuitSet>& circuits = e.circuits.members();
  std::size_t replayed = 0;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    const CircuitSet& c = circuits[i];
    if (e.depths[i] == 0) {
      // Depth 0 means c is a minimal member of A_0; recheck with brute ranks.
      ElemSet supp;
      c.for_each([&](int x) { supp = supp | m.circuits()[x]; });
      if (supp.size() <= 20) {
        const int nullity = supp.size() - brute_rank(m, supp);
        if (c.size() <= nullity) {
          record(r, {"A0", c, {}, -1});
          r.notes.push_back("depth-0 circuit " + describe(c) +
                            " is not in A0 by brute-force nullity");
        }
      }
      continue;
    }
    if (i >= e.witnesses.size() || !e.witnesses[i].has_value()) {
      record(r, {"witness", c, {}, -1});
      continue;
    }
    const Witness& w = *e.witnesses[i];
    const bool parts_dependent =
        contains_member(circuits, w.b1) && contains_member(circuits, w.b2);
    if (!w.b1.contains(w.c) || !w.b2.contains(w.c) || !parts_dependent ||
        (w.b1 | w.b2).without(w.c) != c) {
      record(r, {"witness", w.b1, w.b2, w.c});
    } else {
      ++replayed;
    }
  }
  r.notes.push_back(std::to_string(circuits.size()) + " circuits agree across " +
                    "A-explicit, B-sequence and E-iteration");
  r.notes.push_back(std::to_string(replayed) + " witnesses replayed");
  return r;
}

}  // namespace dmat
