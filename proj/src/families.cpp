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

#include "dmat/families.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "dmat/error.hpp"

namespace dmat {
namespace {

void sort_canonical(std::vector<CircuitSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// Calls fn on every nonempty proper subset of `x`; stops when fn returns true.
template <typename Fn>
bool any_proper_subset(const CircuitSet& x, Fn&& fn) {
  const std::vector<int> elems = x.elements();
  const std::uint64_t full = (std::uint64_t{1} << elems.size()) - 1;
  for (std::uint64_t m = 1; m < full; ++m) {
    CircuitSet sub;
    for (std::uint64_t b = m; b != 0; b &= b - 1) {
      sub.insert(elems[std::countr_zero(b)]);
    }
    if (fn(sub)) return true;
  }
  return false;
}

std::uint64_t mask_of(const CircuitSet& s) {
  return s.words().empty() ? 0 : s.words()[0];
}

}  // namespace

std::vector<CircuitSet> Family::sorted() const {
  std::vector<CircuitSet> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end(), CanonicalLess());
  return out;
}

void Antichain::build_index() {
  index_.clear();
  index_.reserve(members_.size());
  by_min_.clear();
  for (std::size_t i = 0; i < members_.size(); ++i) {
    index_.insert(members_[i]);
    const int m = members_[i].min_element();
    if (m < 0) continue;
    if (static_cast<std::size_t>(m) >= by_min_.size()) by_min_.resize(m + 1);
    by_min_[m].push_back(static_cast<std::uint32_t>(i));
  }
}

Antichain Antichain::from_sorted_antichain(std::vector<CircuitSet> sets) {
  Antichain a;
  a.members_ = std::move(sets);
  a.build_index();
  return a;
}

Antichain Antichain::minimal_of(std::vector<CircuitSet> sets) {
  sort_canonical(sets);
  Antichain kept;
  for (CircuitSet& s : sets) {
    if (kept.up_contains(s)) continue;
    const int m = s.min_element();
    if (m >= 0) {
      if (static_cast<std::size_t>(m) >= kept.by_min_.size()) {
        kept.by_min_.resize(m + 1);
      }
      kept.by_min_[m].push_back(static_cast<std::uint32_t>(kept.members_.size()));
    }
    kept.index_.insert(s);
    kept.members_.push_back(std::move(s));
  }
  return kept;
}

bool Antichain::up_contains(const CircuitSet& x) const {
  if (members_.empty()) return false;
  if (index_.contains(x)) return true;
  const int k = x.size();
  if (k < 24 && (std::size_t{1} << k) < members_.size()) {
    return any_proper_subset(x, [&](const CircuitSet& s) {
      return index_.contains(s);
    });
  }
  bool found = false;
  x.for_each([&](int e) {
    if (found || static_cast<std::size_t>(e) >= by_min_.size()) return;
    for (std::uint32_t i : by_min_[e]) {
      if (members_[i].is_subset_of(x)) {
        found = true;
        return;
      }
    }
  });
  return found;
}

Antichain minimalize(const Family& f) { return Antichain::minimal_of(f.sorted()); }

Family epsilon_step(const Family& f) {
  const std::vector<CircuitSet> members = f.sorted();
  Family out = f;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const CircuitSet& a1 = members[i];
      const CircuitSet& a2 = members[j];
      if (!a1.intersects(a2)) continue;
      const CircuitSet common = a1 & a2;
      if (f.contains(common)) continue;
      const CircuitSet joined = a1 | a2;
      common.for_each([&](int c) { out.insert(joined.without(c)); });
    }
  }
  return out;
}

std::uint64_t count_upward_closure(const Antichain& a, int universe) {
  if (universe > SubsetBitmap::kMaxUniverse) {
    throw Error(ErrorCode::kUniverseTooLarge,
                "universe " + std::to_string(universe) + " exceeds 25");
  }
  SubsetBitmap bitmap(universe);
  for (const CircuitSet& s : a) {
    if (s.span() > universe) {
      throw Error(ErrorCode::kElementOutOfRange,
                  to_string(s) + " outside universe " + std::to_string(universe));
    }
    bitmap.set(mask_of(s));
  }
  bitmap.close_upward();
  return bitmap.count();
}

SubsetBitmap::SubsetBitmap(int universe) : universe_(universe) {
  if (universe < 0 || universe > kMaxUniverse) {
    throw Error(ErrorCode::kUniverseTooLarge,
                "universe " + std::to_string(universe) + " exceeds 25");
  }
  const std::uint64_t bits = std::uint64_t{1} << universe;
  words_.assign((bits + 63) / 64, 0);
}

std::uint64_t SubsetBitmap::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

void SubsetBitmap::close_upward() {
  // Superset zeta transform, one coordinate at a time. The low six
  // coordinates live inside a word, the rest index whole words.
  static constexpr std::uint64_t kLow[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  for (int i = 0; i < universe_ && i < 6; ++i) {
    for (std::uint64_t& w : words_) w |= (w & kLow[i]) << (1 << i);
  }
  for (int i = 6; i < universe_; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((w & stride) == 0) words_[w | stride] |= words_[w];
    }
  }
}

Antichain SubsetBitmap::minimal_members() const {
  SubsetBitmap closed = *this;
  closed.close_upward();
  std::vector<CircuitSet> out;
  const std::uint64_t total = std::uint64_t{1} << universe_;
  for (std::uint64_t x = 0; x < total; ++x) {
    if (!test(x)) continue;
    bool minimal = true;
    for (std::uint64_t b = x; b != 0 && minimal; b &= b - 1) {
      if (closed.test(x & ~(b & (~b + 1)))) minimal = false;
    }
    if (minimal) out.push_back(CircuitSet::from_word(x));
  }
  std::sort(out.begin(), out.end(), CanonicalLess());
  return Antichain::from_sorted_antichain(std::move(out));
}

Family SubsetBitmap::to_family() const {
  Family f;
  f.reserve(count());
  const std::uint64_t total = std::uint64_t{1} << universe_;
  for (std::uint64_t x = 0; x < total; ++x) {
    if (test(x)) f.insert(CircuitSet::from_word(x));
  }
  return f;
}

}  // namespace dmat
