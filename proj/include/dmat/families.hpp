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

#ifndef DMAT_FAMILIES_HPP
#define DMAT_FAMILIES_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "dmat/circuit_set.hpp"

namespace dmat {

// A duplicate-free family of circuit sets with O(1) membership.
class Family {
 public:
  using Set = absl::flat_hash_set<CircuitSet, CircuitSetHash>;

  Family() = default;
  Family(std::initializer_list<CircuitSet> members) {
    for (const CircuitSet& m : members) insert(m);
  }
  explicit Family(const std::vector<CircuitSet>& members) {
    for (const CircuitSet& m : members) insert(m);
  }

  bool insert(const CircuitSet& s) { return members_.insert(s).second; }
  bool contains(const CircuitSet& s) const { return members_.contains(s); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  void reserve(std::size_t n) { members_.reserve(n); }

  // Iteration over the hash set is unordered; use sorted() for output.
  Set::const_iterator begin() const { return members_.begin(); }
  Set::const_iterator end() const { return members_.end(); }

  // Members in canonical order (size, then lexicographic).
  std::vector<CircuitSet> sorted() const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.members_ == b.members_;
  }

 private:
  Set members_;
};

// A family with no member contained in another, in canonical order.
class Antichain {
 public:
  Antichain() = default;

  // Minimal members of `sets`; duplicates and supersets are dropped.
  static Antichain minimal_of(std::vector<CircuitSet> sets);
  // `sets` must already be a canonically sorted antichain; not checked.
  static Antichain from_sorted_antichain(std::vector<CircuitSet> sets);

  const std::vector<CircuitSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const CircuitSet& s) const { return index_.contains(s); }
  // True iff some member is a subset of `x`.
  bool up_contains(const CircuitSet& x) const;

  Family to_family() const { return Family(members_); }

  friend bool operator==(const Antichain& a, const Antichain& b) {
    return a.members_ == b.members_;
  }

 private:
  void build_index();

  std::vector<CircuitSet> members_;
  Family::Set index_;
  // by_min_[e] lists positions of members whose smallest index is e.
  std::vector<std::vector<std::uint32_t>> by_min_;
};

Antichain minimalize(const Family& f);
inline bool up_contains(const Antichain& a, const CircuitSet& x) {
  return a.up_contains(x);
}

// One application of the extension operation: F together with every
// (A1 | A2) - {C} for members A1, A2 whose intersection is not itself a
// member of F (literal membership) and C in that intersection.
Family epsilon_step(const Family& f);

// Number of subsets of {0..universe-1} lying above some member of `a`.
// Universes beyond 25 are rejected with UniverseTooLarge.
std::uint64_t count_upward_closure(const Antichain& a, int universe);

// A dense family over all 2^universe subsets, universe <= 25.
class SubsetBitmap {
 public:
  static constexpr int kMaxUniverse = 25;

  explicit SubsetBitmap(int universe);

  int universe() const { return universe_; }
  bool test(std::uint64_t mask) const {
    return (words_[mask >> 6] >> (mask & 63)) & 1U;
  }
  void set(std::uint64_t mask) {
    words_[mask >> 6] |= std::uint64_t{1} << (mask & 63);
  }
  std::uint64_t count() const;

  // Adds every superset of every member.
  void close_upward();
  // Members none of whose proper subsets are members.
  Antichain minimal_members() const;
  Family to_family() const;

  friend bool operator==(const SubsetBitmap& a, const SubsetBitmap& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  int universe_;
  std::vector<std::uint64_t> words_;
};

}  // namespace dmat

#endif  // DMAT_FAMILIES_HPP
