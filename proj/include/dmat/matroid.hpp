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

#ifndef DMAT_MATROID_HPP
#define DMAT_MATROID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "dmat/elem_set.hpp"

namespace dmat {

struct RankProfile {
  int rank = 0;
  int nullity_of_ground = 0;
};

// A matroid on {0, ..., n-1} presented by its circuits.
//
// Circuits are kept in canonical order (size, then lexicographic); the
// position of a circuit in that list is its index, and those indices form
// the ground set of every derived matroid built from this one.
class Matroid {
 public:
  Matroid() = default;

  // Validates (C1) and (C2) always and (C3) when `validate_exchange` is set.
  // Duplicate circuits are merged. Throws Error on violation.
  static Matroid from_circuits(int n, std::vector<ElemSet> circuits,
                               bool validate_exchange = false,
                               std::vector<std::string> labels = {});

  int size() const { return n_; }
  ElemSet ground() const { return ElemSet::full(n_); }
  const std::vector<ElemSet>& circuits() const { return circuits_; }
  int circuit_count() const { return static_cast<int>(circuits_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label_of(int e) const;

  bool is_independent(ElemSet s) const;
  // Scans `s` in ascending order, keeping e whenever T + e stays independent.
  ElemSet greedy_basis_of(ElemSet s) const;
  int rank_of(ElemSet s) const { return greedy_basis_of(s).size(); }
  int nullity_of(ElemSet s) const { return s.size() - rank_of(s); }
  RankProfile rank_profile() const;

  // The unique circuit inside basis + e.
  ElemSet fundamental_circuit(ElemSet basis, int e) const;

  // Blocks in order of their smallest element.
  std::vector<ElemSet> connected_components() const;
  bool is_connected() const;

  // Index of `c` in the canonical circuit list, or -1.
  int circuit_index(ElemSet c) const;

  // Equality of ground size and circuit lists; labels are presentation only.
  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.circuits_ == b.circuits_;
  }

 private:
  int n_ = 0;
  std::vector<ElemSet> circuits_;
  std::vector<std::string> labels_;
  // circuits_by_element_[e] lists the circuits containing e.
  std::vector<std::vector<ElemSet>> circuits_by_element_;
};

// Ground set of `b` is shifted past that of `a`.
Matroid direct_sum(const Matroid& a, const Matroid& b);

// Memoized nullity for repeated queries on one matroid. A dense table is used
// up to 20 elements, a hash map beyond. Not thread-safe.
class NullityCache {
 public:
  explicit NullityCache(const Matroid& m);
  int nullity(ElemSet s);
  int ground_nullity() const { return ground_nullity_; }

 private:
  const Matroid* matroid_;
  int ground_nullity_;
  std::vector<std::int8_t> table_;
  absl::flat_hash_map<std::uint64_t, int> memo_;
};

}  // namespace dmat

#endif  // DMAT_MATROID_HPP
