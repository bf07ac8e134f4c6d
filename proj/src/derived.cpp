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

#include "dmat/derived.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include "dmat/error.hpp"

namespace dmat {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_universe(const Matroid& m) {
  if (m.circuit_count() > CircuitSet::kMaxUniverse) {
    throw Error(ErrorCode::kUniverseTooLarge,
                std::to_string(m.circuit_count()) + " circuits exceed 4096");
  }
}

ElemSet support_with(const std::vector<ElemSet>& circuits, const CircuitSet& a) {
  ElemSet s;
  a.for_each([&](int i) { s = s | circuits[i]; });
  return s;
}

// Calls fn(Y) for every k-subset Y of `pool` (ascending positions).
template <typename Fn>
void for_each_combination(const std::vector<int>& pool, int k, Fn&& fn) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    CircuitSet y;
    for (int i : idx) y.insert(pool[i]);
    fn(y);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Calls fn(sub) for every nonempty subset of `x` given as an element list.
template <typename Fn>
void for_each_nonempty_subset(const std::vector<int>& elems, Fn&& fn) {
  const std::uint64_t full = (std::uint64_t{1} << elems.size()) - 1;
  for (std::uint64_t m = 1; m <= full; ++m) {
    CircuitSet sub;
    for (std::uint64_t b = m; b != 0; b &= b - 1) {
      sub.insert(elems[std::countr_zero(b)]);
    }
    fn(sub);
  }
}

struct MemberInfo {
  int depth = 0;
  std::optional<Witness> witness;
};

// After the iteration settles, prefer witnesses drawn from the final circuit
// list itself: both parts of smaller depth, as the circuit lemma promises.
void reselect_witnesses(
    int universe, const std::vector<CircuitSet>& members,
    absl::flat_hash_map<CircuitSet, MemberInfo, CircuitSetHash>& info) {
  for (const CircuitSet& a : members) {
    MemberInfo& mi = info[a];
    if (mi.depth == 0 || a.size() > 20) continue;
    const std::vector<int> elems = a.elements();
    bool done = false;
    for (int c = 0; c < universe && !done; ++c) {
      if (a.contains(c)) continue;
      const CircuitSet y = a.with(c);
      std::vector<CircuitSet> parts;
      const std::uint64_t full = (std::uint64_t{1} << elems.size()) - 1;
      for (std::uint64_t m = 1; m < full; ++m) {
        CircuitSet b = CircuitSet{c};
        for (std::uint64_t t = m; t != 0; t &= t - 1) {
          b.insert(elems[std::countr_zero(t)]);
        }
        auto it = info.find(b);
        if (it != info.end() && it->second.depth < mi.depth) {
          parts.push_back(b);
        }
      }
      std::sort(parts.begin(), parts.end(), CanonicalLess());
      for (std::size_t i = 0; i < parts.size() && !done; ++i) {
        for (std::size_t j = i + 1; j < parts.size() && !done; ++j) {
          if ((parts[i] | parts[j]) == y) {
            mi.witness = Witness{parts[i], parts[j], c};
            done = true;
          }
        }
      }
    }
  }
}

}  // namespace

std::string circuit_label(const Matroid& base, ElemSet circuit) {
  bool short_labels = true;
  circuit.for_each([&](int e) {
    if (base.label_of(e).size() != 1) short_labels = false;
  });
  std::string out;
  circuit.for_each([&](int e) {
    if (!out.empty() && !short_labels) out += '-';
    out += base.label_of(e);
  });
  return out;
}

int DerivedResult::depth_of(const CircuitSet& s) const {
  const auto& m = circuits.members();
  auto it = std::lower_bound(m.begin(), m.end(), s, CanonicalLess());
  if (it == m.end() || !(*it == s)) return -1;
  return depths[it - m.begin()];
}

Matroid DerivedResult::as_matroid() const {
  if (universe > ElemSet::kMaxElements) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "derived ground set has " + std::to_string(universe) +
                    " elements");
  }
  std::vector<ElemSet> sets;
  sets.reserve(circuits.size());
  for (const CircuitSet& s : circuits) sets.push_back(ElemSet(s.words()[0]));
  std::vector<std::string> labels;
  for (ElemSet c : base.circuits()) labels.push_back(circuit_label(base, c));
  return Matroid::from_circuits(universe, std::move(sets), false,
                                std::move(labels));
}

ElemSet support_of(const Matroid& m, const CircuitSet& a) {
  if (a.span() > m.circuit_count()) {
    throw Error(ErrorCode::kElementOutOfRange,
                to_string(a) + " is not a set of circuit indices");
  }
  return support_with(m.circuits(), a);
}

bool in_a0(const Matroid& m, const CircuitSet& a) {
  return a.size() > m.nullity_of(support_of(m, a));
}

Antichain a0_minimal(const Matroid& m, std::uint64_t subset_budget) {
  check_universe(m);
  const int universe = m.circuit_count();
  const std::vector<ElemSet>& circuits = m.circuits();
  NullityCache nullity(m);
  const int top = nullity.ground_nullity() + 1;

  std::vector<CircuitSet> minimal;
  // Sets of the previous level lying above no minimal member, in
  // lexicographic order; extending each by larger indices keeps that order.
  std::vector<CircuitSet> free_prev{CircuitSet{}};
  absl::flat_hash_set<CircuitSet, CircuitSetHash> free_prev_index;
  free_prev_index.insert(CircuitSet{});
  std::uint64_t examined = 0;

  for (int level = 1; level <= top && !free_prev.empty(); ++level) {
    std::vector<CircuitSet> free_cur;
    absl::flat_hash_set<CircuitSet, CircuitSetHash> free_cur_index;
    for (const CircuitSet& x : free_prev) {
      const std::vector<int> xs = x.elements();
      for (int j = x.span(); j < universe; ++j) {
        if (++examined > subset_budget) {
          throw Error(ErrorCode::kCombinatorialBudgetExceeded,
                      "more than " + std::to_string(subset_budget) +
                          " candidate sets at size " + std::to_string(level));
        }
        const CircuitSet y = x.with(j);
        bool facets_free = true;
        for (int e : xs) {
          if (!free_prev_index.contains(y.without(e))) {
            facets_free = false;
            break;
          }
        }
        if (!facets_free) continue;
        const bool dependent =
            level == top ||
            level > nullity.nullity(support_with(circuits, y));
        if (dependent) {
          minimal.push_back(y);
        } else {
          free_cur_index.insert(y);
          free_cur.push_back(y);
        }
      }
    }
    free_prev = std::move(free_cur);
    free_prev_index = std::move(free_cur_index);
  }
  return Antichain::from_sorted_antichain(std::move(minimal));
}

DerivedResult derive_circuits(const Matroid& m, const Limits& limits) {
  const auto started = Clock::now();
  DerivedResult result;
  result.base = m;
  result.universe = m.circuit_count();
  const int nm = m.rank_profile().nullity_of_ground;
  const int cap = limits.max_set_size > 0 ? limits.max_set_size : nm + 2;
  result.trace.engine = "E-iteration";
  result.trace.max_iterations = limits.max_iterations;
  result.trace.max_set_size = cap;
  bool truncated = false;

  absl::flat_hash_map<CircuitSet, MemberInfo, CircuitSetHash> info;
  std::vector<CircuitSet> current;
  for (const CircuitSet& s : a0_minimal(m, limits.subset_budget)) {
    if (s.size() > cap) {
      truncated = true;
      continue;
    }
    current.push_back(s);
    info.emplace(s, MemberInfo{});
  }
  // Only members of at most n(M) circuits can produce a product that is not
  // already above E_0; the others never need pairing.
  std::vector<CircuitSet> fresh;
  for (const CircuitSet& s : current) {
    if (s.size() <= nm) fresh.push_back(s);
  }
  result.trace.iterations.push_back(
      {0, current.size(), current.size(), seconds_since(started)});

  bool fixpoint = false;
  for (int i = 0; i < limits.max_iterations; ++i) {
    const Antichain above = Antichain::from_sorted_antichain(current);
    // Posting lists of the pairable members.
    std::vector<std::vector<std::uint32_t>> posting(result.universe);
    std::vector<std::uint32_t> pairable;
    for (std::uint32_t k = 0; k < current.size(); ++k) {
      if (current[k].size() > nm) continue;
      pairable.push_back(k);
      current[k].for_each([&](int e) { posting[e].push_back(k); });
    }

    absl::flat_hash_map<CircuitSet, Witness, CircuitSetHash> products;
    std::vector<CircuitSet> product_order;
    std::vector<std::uint32_t> stamp(current.size(), 0);
    std::uint32_t tick = 0;
    for (const CircuitSet& a1 : fresh) {
      ++tick;
      a1.for_each([&](int e) {
        for (std::uint32_t k : posting[e]) {
          if (stamp[k] == tick) continue;
          stamp[k] = tick;
          const CircuitSet& a2 = current[k];
          if (a2 == a1) continue;
          const CircuitSet joined = a1 | a2;
          if (joined.size() > nm + 1) continue;
          const CircuitSet common = a1 & a2;
          common.for_each([&](int c) {
            CircuitSet p = joined.without(c);
            if (products.contains(p) || above.up_contains(p)) return;
            if (p.size() > cap) {
              truncated = true;
              return;
            }
            products.emplace(p, Witness{a1, a2, c});
            product_order.push_back(std::move(p));
          });
        }
      });
      if (products.size() > limits.subset_budget) {
        throw Error(ErrorCode::kCombinatorialBudgetExceeded,
                    "more than " + std::to_string(limits.subset_budget) +
                        " new sets in one iteration");
      }
    }

    if (products.empty()) {
      fixpoint = true;
      break;
    }
    const Antichain added = Antichain::minimal_of(std::move(product_order));
    std::vector<CircuitSet> next;
    next.reserve(current.size() + added.size());
    for (CircuitSet& s : current) {
      if (added.up_contains(s)) {
        info.erase(s);
      } else {
        next.push_back(std::move(s));
      }
    }
    fresh.clear();
    for (const CircuitSet& s : added) {
      next.push_back(s);
      fresh.push_back(s);
      info.emplace(s, MemberInfo{i + 1, products.at(s)});
    }
    std::sort(next.begin(), next.end(), CanonicalLess());
    current = std::move(next);
    result.trace.iterations.push_back(
        {i + 1, current.size(), added.size(), seconds_since(started)});
  }

  reselect_witnesses(result.universe, current, info);
  result.depths.reserve(current.size());
  result.witnesses.reserve(current.size());
  for (const CircuitSet& s : current) {
    const MemberInfo& mi = info.at(s);
    result.depths.push_back(mi.depth);
    result.witnesses.push_back(mi.witness);
  }
  result.circuits = Antichain::from_sorted_antichain(std::move(current));
  result.trace.fixpoint = fixpoint;
  result.complete = fixpoint && !truncated;
  return result;
}

SubsetBitmap derive_dependents_explicit(const Matroid& m) {
  const int universe = m.circuit_count();
  if (universe > SubsetBitmap::kMaxUniverse) {
    throw Error(ErrorCode::kUniverseTooLarge,
                std::to_string(universe) + " circuits exceed 25");
  }
  NullityCache nullity(m);
  const int nm = nullity.ground_nullity();
  const std::vector<ElemSet>& circuits = m.circuits();

  // A_0 by depth-first enumeration, carrying the support along.
  SubsetBitmap a(universe);
  auto visit = [&](auto&& self, int next, std::uint64_t mask, ElemSet supp,
                   int size) -> void {
    if (size > nullity.nullity(supp)) a.set(mask);
    for (int j = next; j < universe; ++j) {
      self(self, j + 1, mask | (std::uint64_t{1} << j), supp | circuits[j],
           size + 1);
    }
  };
  visit(visit, 0, 0, ElemSet{}, 0);

  // Products Y - {C} with |Y| > n(M) + 1 already lie in A_0.
  std::vector<std::uint64_t> unions;
  const std::uint64_t total = std::uint64_t{1} << universe;
  for (std::uint64_t y = 1; y < total; ++y) {
    if (std::popcount(y) <= nm + 1) unions.push_back(y);
  }

  while (true) {
    SubsetBitmap next = a;
    for (std::uint64_t y : unions) {
      for (std::uint64_t a1 = y; a1 != 0; a1 = (a1 - 1) & y) {
        if (!a.test(a1)) continue;
        const std::uint64_t rest = y & ~a1;
        for (std::uint64_t j = a1; j != 0; j = (j - 1) & a1) {
          if (a.test(j) || !a.test(rest | j)) continue;
          for (std::uint64_t b = j; b != 0; b &= b - 1) {
            next.set(y & ~(b & (~b + 1)));
          }
        }
      }
    }
    next.close_upward();
    if (next == a) break;
    a = std::move(next);
  }
  return a;
}

Antichain b_sequence(const Matroid& m, const Limits& limits) {
  const int nm = m.rank_profile().nullity_of_ground;
  const int universe = m.circuit_count();
  // Every set of more than n(M) circuits lies above B_0 already, so only
  // products of at most n(M) circuits can change min. Such a product has
  // parents of at most n(M) circuits: a parent equal to the union would
  // contain the other parent, which then blocks the pair as the
  // intersection. Larger members are kept but never paired.
  //
  // A pair is blocked when its intersection lies in the upward closure of
  // B_i, not only when it is a member. B_i is not an antichain, and with
  // literal membership a dependent intersection such as {0,1,2,3} of
  // {0,1,2,3,13} and {0,1,2,3,14} lets an independent product through (seen
  // on a rank-2 matroid with parallel classes of sizes 3, 2, 2).
  std::vector<CircuitSet> members = a0_minimal(m, limits.subset_budget).members();
  Family family(members);
  std::vector<std::vector<std::uint32_t>> posting(universe);
  auto index_member = [&](std::uint32_t k) {
    if (members[k].size() > nm) return;
    members[k].for_each([&](int e) { posting[e].push_back(k); });
  };
  for (std::uint32_t k = 0; k < members.size(); ++k) index_member(k);

  std::vector<std::uint32_t> frontier(members.size());
  std::iota(frontier.begin(), frontier.end(), 0);
  for (int round = 0; !frontier.empty(); ++round) {
    if (round >= limits.max_iterations) {
      throw Error(ErrorCode::kCombinatorialBudgetExceeded,
                  "no fixpoint within " + std::to_string(limits.max_iterations) +
                      " rounds");
    }
    std::vector<CircuitSet> small;
    for (const CircuitSet& x : members) {
      if (x.size() < nm) small.push_back(x);
    }
    const Antichain floor = Antichain::minimal_of(std::move(small));
    std::vector<CircuitSet> added;
    absl::flat_hash_set<CircuitSet, CircuitSetHash> added_index;
    std::vector<std::uint32_t> stamp(members.size(), 0);
    std::uint32_t tick = 0;
    for (std::uint32_t f : frontier) {
      const CircuitSet a1 = members[f];
      if (a1.size() > nm) continue;
      ++tick;
      a1.for_each([&](int e) {
        for (std::uint32_t k : posting[e]) {
          if (stamp[k] == tick || k == f) continue;
          stamp[k] = tick;
          const CircuitSet& a2 = members[k];
          const CircuitSet common = a1 & a2;
          const CircuitSet joined = a1 | a2;
          if (joined.size() > nm + 1) continue;
          // Parents have at most n(M) circuits, so the intersection has fewer.
          if (floor.up_contains(common)) continue;
          common.for_each([&](int c) {
            CircuitSet p = joined.without(c);
            if (family.contains(p) || added_index.contains(p)) return;
            added_index.insert(p);
            added.push_back(std::move(p));
          });
        }
      });
    }
    // B_{i+1} is computed from B_i alone, so the new sets join only after
    // the whole round.
    std::sort(added.begin(), added.end(), CanonicalLess());
    frontier.clear();
    for (CircuitSet& p : added) {
      family.insert(p);
      const auto k = static_cast<std::uint32_t>(members.size());
      members.push_back(std::move(p));
      index_member(k);
      frontier.push_back(k);
    }
    if (members.size() > limits.subset_budget) {
      throw Error(ErrorCode::kCombinatorialBudgetExceeded,
                  "family grew past " + std::to_string(limits.subset_budget));
    }
  }
  return Antichain::minimal_of(std::move(members));
}

std::string_view dependence_name(Dependence d) {
  switch (d) {
    case Dependence::kDependent: return "dependent";
    case Dependence::kIndependent: return "independent";
    case Dependence::kUnknown: return "unknown";
  }
  return "unknown";
}

Dependence is_dependent_in_derived(const DerivedResult& r, const CircuitSet& a) {
  if (r.circuits.up_contains(a)) return Dependence::kDependent;
  return r.complete ? Dependence::kIndependent : Dependence::kUnknown;
}

DerivedStats derived_stats(const DerivedResult& r) {
  DerivedStats st;
  st.complete = r.complete;
  const auto& members = r.circuits.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    ++st.size_histogram[members[i].size()];
    ++st.depth_histogram[r.depths[i]];
  }
  st.base_nullity = r.base.rank_profile().nullity_of_ground;

  std::vector<std::vector<std::uint32_t>> by_element(r.universe);
  for (std::uint32_t k = 0; k < members.size(); ++k) {
    members[k].for_each([&](int e) { by_element[e].push_back(k); });
  }
  auto independent_after_adding = [&](const CircuitSet& t, int e) {
    const CircuitSet grown = t.with(e);
    for (std::uint32_t k : by_element[e]) {
      if (members[k].is_subset_of(grown)) return false;
    }
    return true;
  };
  CircuitSet basis;
  for (int e = 0; e < r.universe; ++e) {
    if (independent_after_adding(basis, e)) basis.insert(e);
  }
  st.rank = basis.size();
  st.rank_gap = st.base_nullity - st.rank;

  std::vector<int> parent(r.universe);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const CircuitSet& c : members) {
    const int root = find(c.min_element());
    c.for_each([&](int e) { parent[find(e)] = root; });
  }
  for (int e = 0; e < r.universe; ++e) {
    if (find(e) == e) ++st.components;
  }
  st.connected = r.universe >= 1 && st.components == 1;

  CircuitSet covered;
  for (const CircuitSet& c : members) {
    if (c.size() == 3) covered = covered | c;
  }
  st.elements_in_triangles = covered.size();
  st.every_element_in_triangle = st.elements_in_triangles == r.universe;

  const Matroid& base = r.base;
  const ElemSet b = base.greedy_basis_of(base.ground());
  CircuitSet fundamentals;
  (base.ground() - b).for_each([&](int e) {
    fundamentals.insert(base.circuit_index(base.fundamental_circuit(b, e)));
  });
  st.fundamental_circuits_form_basis =
      !r.circuits.up_contains(fundamentals) && fundamentals.size() == st.rank;
  return st;
}

bool hanging_extension_check(const Matroid& m, const CircuitSet& s, int c) {
  if (c < 0 || c >= m.circuit_count()) {
    throw Error(ErrorCode::kElementOutOfRange,
                "circuit index " + std::to_string(c));
  }
  if (s.contains(c) || in_a0(m, s)) return false;
  if (m.circuits()[c].is_subset_of(support_of(m, s))) return false;
  if (in_a0(m, s.with(c))) {
    throw std::logic_error("hanging extension " + to_string(s) + " + " +
                           std::to_string(c) + " lies in A_0");
  }
  return true;
}

bool witness_replays(const Witness& w, const CircuitSet& target) {
  return w.c >= 0 && w.b1.contains(w.c) && w.b2.contains(w.c) &&
         !(w.b1 == w.b2) && ((w.b1 | w.b2).without(w.c) == target);
}

const ProductClass* EpsilonCensus::find(int size1, int size2,
                                        int product_size) const {
  for (const ProductClass& pc : classes) {
    if (pc.size1 == size1 && pc.size2 == size2 &&
        pc.product_size == product_size) {
      return &pc;
    }
  }
  return nullptr;
}

EpsilonCensus epsilon_census_of_a0(const Matroid& m,
                                   std::uint64_t subset_budget) {
  check_universe(m);
  const int universe = m.circuit_count();
  const std::vector<ElemSet>& circuits = m.circuits();
  NullityCache nullity(m);
  const int nm = nullity.ground_nullity();
  auto member = [&](const CircuitSet& a) {
    return a.size() > nullity.nullity(support_with(circuits, a));
  };

  std::vector<int> all(universe);
  std::iota(all.begin(), all.end(), 0);
  std::vector<CircuitSet> a0;
  std::uint64_t examined = 0;
  EpsilonCensus census;
  for (int k = 1; k <= nm; ++k) {
    for_each_combination(all, k, [&](const CircuitSet& y) {
      if (++examined > subset_budget) {
        throw Error(ErrorCode::kCombinatorialBudgetExceeded,
                    "A_0 census exceeds " + std::to_string(subset_budget));
      }
      if (member(y)) {
        a0.push_back(y);
        ++census.a0_by_size[k];
      }
    });
  }

  std::map<std::tuple<int, int, int>,
           absl::flat_hash_set<CircuitSet, CircuitSetHash>>
      found;
  for (const CircuitSet& a1 : a0) {
    const std::vector<int> elems = a1.elements();
    std::vector<int> outside;
    for (int j = 0; j < universe; ++j) {
      if (!a1.contains(j)) outside.push_back(j);
    }
    const int room = nm + 1 - a1.size();
    for_each_nonempty_subset(elems, [&](const CircuitSet& common) {
      if (member(common)) return;
      for (int r = 1; r <= room; ++r) {
        for_each_combination(outside, r, [&](const CircuitSet& rest) {
          const CircuitSet a2 = common | rest;
          if (!member(a2)) return;
          const CircuitSet joined = a1 | rest;
          const int s1 = std::min(a1.size(), a2.size());
          const int s2 = std::max(a1.size(), a2.size());
          auto& bucket = found[{s1, s2, joined.size() - 1}];
          common.for_each([&](int c) { bucket.insert(joined.without(c)); });
        });
      }
    });
  }
  for (auto& [key, bucket] : found) {
    ProductClass pc;
    std::tie(pc.size1, pc.size2, pc.product_size) = key;
    pc.products.assign(bucket.begin(), bucket.end());
    std::sort(pc.products.begin(), pc.products.end(), CanonicalLess());
    for (const CircuitSet& p : pc.products) {
      if (!member(p)) pc.new_products.push_back(p);
    }
    census.classes.push_back(std::move(pc));
  }
  return census;
}

}  // namespace dmat
