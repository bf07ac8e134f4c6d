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

#ifndef DMAT_CIRCUIT_SET_HPP
#define DMAT_CIRCUIT_SET_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace dmat {

// A set of circuit indices over a universe of up to 4096 circuits.
//
// Storage is a little-endian word vector with trailing zero words trimmed,
// so two sets are equal iff their word vectors are equal regardless of the
// universe they were built for. Universes up to 64 stay inline.
class CircuitSet {
 public:
  static constexpr int kMaxUniverse = 4096;
  using Words = boost::container::small_vector<std::uint64_t, 1>;

  CircuitSet() = default;
  CircuitSet(std::initializer_list<int> members) {
    for (int m : members) insert(m);
  }
  static CircuitSet from_elements(const std::vector<int>& members) {
    CircuitSet s;
    for (int m : members) s.insert(m);
    return s;
  }
  static CircuitSet from_word(std::uint64_t w) {
    CircuitSet s;
    if (w != 0) s.words_.push_back(w);
    return s;
  }

  const Words& words() const { return words_; }

  bool empty() const { return words_.empty(); }
  int size() const {
    int n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }
  bool contains(int i) const {
    const std::size_t w = static_cast<std::size_t>(i) >> 6;
    return w < words_.size() && ((words_[w] >> (i & 63)) & 1U);
  }
  // Largest member + 1, or 0 when empty.
  int span() const {
    if (words_.empty()) return 0;
    return static_cast<int>(words_.size() - 1) * 64 + 64 -
           std::countl_zero(words_.back());
  }
  int min_element() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return static_cast<int>(w) * 64 + std::countr_zero(words_[w]);
      }
    }
    return -1;
  }

  void insert(int i) {
    const std::size_t w = static_cast<std::size_t>(i) >> 6;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (i & 63);
  }
  void erase(int i) {
    const std::size_t w = static_cast<std::size_t>(i) >> 6;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (i & 63));
    trim();
  }
  CircuitSet with(int i) const {
    CircuitSet s = *this;
    s.insert(i);
    return s;
  }
  CircuitSet without(int i) const {
    CircuitSet s = *this;
    s.erase(i);
    return s;
  }

  bool is_subset_of(const CircuitSet& other) const {
    if (words_.size() > other.words_.size()) return false;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }
  bool intersects(const CircuitSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w) {
      if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
  }
  int intersection_size(const CircuitSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    int c = 0;
    for (std::size_t w = 0; w < n; ++w) {
      c += std::popcount(words_[w] & other.words_[w]);
    }
    return c;
  }

  friend CircuitSet operator|(const CircuitSet& a, const CircuitSet& b) {
    const CircuitSet& big = a.words_.size() >= b.words_.size() ? a : b;
    const CircuitSet& small = a.words_.size() >= b.words_.size() ? b : a;
    CircuitSet r = big;
    for (std::size_t w = 0; w < small.words_.size(); ++w) {
      r.words_[w] |= small.words_[w];
    }
    return r;
  }
  friend CircuitSet operator&(const CircuitSet& a, const CircuitSet& b) {
    CircuitSet r;
    const std::size_t n = std::min(a.words_.size(), b.words_.size());
    r.words_.resize(n);
    for (std::size_t w = 0; w < n; ++w) r.words_[w] = a.words_[w] & b.words_[w];
    r.trim();
    return r;
  }
  friend CircuitSet operator-(const CircuitSet& a, const CircuitSet& b) {
    CircuitSet r = a;
    const std::size_t n = std::min(a.words_.size(), b.words_.size());
    for (std::size_t w = 0; w < n; ++w) r.words_[w] &= ~b.words_[w];
    r.trim();
    return r;
  }
  friend bool operator==(const CircuitSet& a, const CircuitSet& b) {
    return a.words_ == b.words_;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t b = words_[w]; b != 0; b &= b - 1) {
        fn(static_cast<int>(w) * 64 + std::countr_zero(b));
      }
    }
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ULL ^ words_.size();
    for (std::uint64_t w : words_) {
      std::uint64_t x = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      h ^= x ^ (x >> 31);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  Words words_;
};

struct CircuitSetHash {
  std::size_t operator()(const CircuitSet& s) const noexcept { return s.hash(); }
};

// Size first, then lexicographic on ascending member lists.
inline bool canonical_less(const CircuitSet& a, const CircuitSet& b) {
  const int sa = a.size();
  const int sb = b.size();
  if (sa != sb) return sa < sb;
  const auto& wa = a.words();
  const auto& wb = b.words();
  const std::size_t n = std::max(wa.size(), wb.size());
  for (std::size_t w = 0; w < n; ++w) {
    const std::uint64_t x = w < wa.size() ? wa[w] : 0;
    const std::uint64_t y = w < wb.size() ? wb[w] : 0;
    const std::uint64_t diff = x ^ y;
    if (diff != 0) return (x & (diff & (~diff + 1))) != 0;
  }
  return false;
}

struct CanonicalLess {
  bool operator()(const CircuitSet& a, const CircuitSet& b) const {
    return canonical_less(a, b);
  }
};

inline std::string to_string(const CircuitSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

}  // namespace dmat

#endif  // DMAT_CIRCUIT_SET_HPP
