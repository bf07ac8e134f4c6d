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

#include "dmat/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include <absl/container/flat_hash_set.h>

#include "dmat/error.hpp"

namespace dmat {
namespace {

// Checks that no circuit strictly contains another. `sorted` is canonical,
// hence ordered by size. For each circuit we either probe its proper subsets
// in a hash set or scan the smaller circuits, whichever is cheaper.
void check_antichain(const std::vector<ElemSet>& sorted) {
  absl::flat_hash_set<std::uint64_t> seen;
  seen.reserve(sorted.size());
  std::size_t smaller_end = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const ElemSet c = sorted[i];
    while (smaller_end < i && sorted[smaller_end].size() < c.size()) {
      seen.insert(sorted[smaller_end].bits());
      ++smaller_end;
    }
    const int k = c.size();
    const bool probe_subsets =
        k < 20 && (std::uint64_t{1} << k) < static_cast<std::uint64_t>(smaller_end);
    if (probe_subsets) {
      const std::uint64_t full = c.bits();
      for (std::uint64_t sub = (full - 1) & full; sub != 0;
           sub = (sub - 1) & full) {
        if (seen.contains(sub)) {
          throw Error(ErrorCode::kComparableCircuits,
                      to_string(ElemSet(sub)) + " is contained in " +
                          to_string(c));
        }
      }
    } else {
      for (std::size_t j = 0; j < smaller_end; ++j) {
        if (sorted[j].is_subset_of(c)) {
          throw Error(ErrorCode::kComparableCircuits,
                      to_string(sorted[j]) + " is contained in " +
                          to_string(c));
        }
      }
    }
  }
}

}  // namespace

Matroid Matroid::from_circuits(int n, std::vector<ElemSet> circuits,
                               bool validate_exchange,
                               std::vector<std::string> labels) {
  if (n < 0 || n > ElemSet::kMaxElements) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "ground set size " + std::to_string(n) + " exceeds 64");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::kParseError,
                "expected " + std::to_string(n) + " labels, got " +
                    std::to_string(labels.size()));
  }
  const ElemSet ground = ElemSet::full(n);
  for (ElemSet c : circuits) {
    if (c.empty()) throw Error(ErrorCode::kEmptyCircuit, "empty circuit");
    if (!c.is_subset_of(ground)) {
      throw Error(ErrorCode::kElementOutOfRange,
                  "circuit " + to_string(c) + " leaves {0.." +
                      std::to_string(n - 1) + "}");
    }
  }
  std::sort(circuits.begin(), circuits.end(),
            [](ElemSet a, ElemSet b) { return canonical_less(a, b); });
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  check_antichain(circuits);

  Matroid m;
  m.n_ = n;
  m.circuits_ = std::move(circuits);
  m.labels_ = std::move(labels);
  m.circuits_by_element_.assign(n, {});
  for (ElemSet c : m.circuits_) {
    c.for_each([&](int e) { m.circuits_by_element_[e].push_back(c); });
  }

  if (validate_exchange) {
    for (std::size_t i = 0; i < m.circuits_.size(); ++i) {
      for (std::size_t j = i + 1; j < m.circuits_.size(); ++j) {
        const ElemSet c1 = m.circuits_[i];
        const ElemSet c2 = m.circuits_[j];
        const ElemSet common = c1 & c2;
        common.for_each([&](int e) {
          if (m.is_independent((c1 | c2).without(e))) {
            throw Error(ErrorCode::kExchangeFails,
                        "circuits " + to_string(c1) + " and " + to_string(c2) +
                            " with element " + std::to_string(e));
          }
        });
      }
    }
  }
  return m;
}

std::string Matroid::label_of(int e) const {
  if (e >= 0 && e < static_cast<int>(labels_.size())) return labels_[e];
  return std::to_string(e);
}

bool Matroid::is_independent(ElemSet s) const {
  for (ElemSet c : circuits_) {
    if (c.is_subset_of(s)) return false;
  }
  return true;
}

ElemSet Matroid::greedy_basis_of(ElemSet s) const {
  ElemSet t;
  s.for_each([&](int e) {
    const ElemSet candidate = t.with(e);
    for (ElemSet c : circuits_by_element_[e]) {
      if (c.is_subset_of(candidate)) return;
    }
    t = candidate;
  });
  return t;
}

RankProfile Matroid::rank_profile() const {
  const int r = rank_of(ground());
  return RankProfile{r, n_ - r};
}

ElemSet Matroid::fundamental_circuit(ElemSet basis, int e) const {
  if (e < 0 || e >= n_) {
    throw Error(ErrorCode::kElementOutOfRange, std::to_string(e));
  }
  if (basis.contains(e)) {
    throw Error(ErrorCode::kElementInBasis,
                std::to_string(e) + " in " + to_string(basis));
  }
  if (!basis.is_subset_of(ground()) || !is_independent(basis) ||
      basis.size() != rank_of(ground())) {
    throw Error(ErrorCode::kNotABasis, to_string(basis));
  }
  const ElemSet span = basis.with(e);
  ElemSet found;
  int count = 0;
  for (ElemSet c : circuits_by_element_[e]) {
    if (c.is_subset_of(span)) {
      found = c;
      ++count;
    }
  }
  // Basis + e has nullity exactly one, so exactly one circuit fits.
  if (count != 1) {
    throw std::logic_error("fundamental circuit not unique for " +
                           to_string(basis) + " + " + std::to_string(e));
  }
  return found;
}

std::vector<ElemSet> Matroid::connected_components() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (ElemSet c : circuits_) {
    const int root = find(c.min_element());
    c.for_each([&](int e) {
      const int r = find(e);
      if (r != root) parent[r] = root;
    });
  }
  std::vector<ElemSet> blocks;
  std::vector<int> block_of_root(n_, -1);
  for (int e = 0; e < n_; ++e) {
    const int r = find(e);
    if (block_of_root[r] < 0) {
      block_of_root[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of_root[r]].insert(e);
  }
  return blocks;
}

bool Matroid::is_connected() const {
  return n_ >= 1 && connected_components().size() == 1;
}

int Matroid::circuit_index(ElemSet c) const {
  auto it = std::lower_bound(
      circuits_.begin(), circuits_.end(), c,
      [](ElemSet a, ElemSet b) { return canonical_less(a, b); });
  if (it == circuits_.end() || *it != c) return -1;
  return static_cast<int>(it - circuits_.begin());
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  if (n > ElemSet::kMaxElements) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "direct sum has " + std::to_string(n) + " elements");
  }
  std::vector<ElemSet> circuits = a.circuits();
  for (ElemSet c : b.circuits()) {
    circuits.push_back(ElemSet(c.bits() << a.size()));
  }
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    for (int e = 0; e < a.size(); ++e) labels.push_back(a.label_of(e));
    // Unlabeled elements of b keep their new index as a name.
    for (int e = 0; e < b.size(); ++e) {
      labels.push_back(b.labels().empty() ? std::to_string(a.size() + e) : b.label_of(e));
    }
  }
  return Matroid::from_circuits(n, std::move(circuits), false,
                                std::move(labels));
}

NullityCache::NullityCache(const Matroid& m)
    : matroid_(&m), ground_nullity_(m.nullity_of(m.ground())) {
  if (m.size() <= 20) table_.assign(std::size_t{1} << m.size(), -1);
}

int NullityCache::nullity(ElemSet s) {
  if (!table_.empty()) {
    std::int8_t& slot = table_[s.bits()];
    if (slot < 0) slot = static_cast<std::int8_t>(matroid_->nullity_of(s));
    return slot;
  }
  auto [it, inserted] = memo_.try_emplace(s.bits(), 0);
  if (inserted) it->second = matroid_->nullity_of(s);
  return it->second;
}

}  // namespace dmat
