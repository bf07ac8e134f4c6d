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

#ifndef DMAT_ELEM_SET_HPP
#define DMAT_ELEM_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dmat {

// A subset of a ground set of at most 64 elements, one bit per element.
class ElemSet {
 public:
  static constexpr int kMaxElements = 64;

  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}
  ElemSet(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }

  static ElemSet from_elements(const std::vector<int>& elements) {
    ElemSet s;
    for (int e : elements) s.insert(e);
    return s;
  }
  // {0, ..., n-1}
  static constexpr ElemSet full(int n) {
    return ElemSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(ElemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElemSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Largest member + 1, or 0 for the empty set.
  constexpr int span() const { return 64 - std::countl_zero(bits_); }
  constexpr int min_element() const { return std::countr_zero(bits_); }

  void insert(int e) { bits_ |= std::uint64_t{1} << e; }
  void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr ElemSet with(int e) const {
    return ElemSet(bits_ | (std::uint64_t{1} << e));
  }
  constexpr ElemSet without(int e) const {
    return ElemSet(bits_ & ~(std::uint64_t{1} << e));
  }

  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) {
    return ElemSet(a.bits_ | b.bits_);
  }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) {
    return ElemSet(a.bits_ & b.bits_);
  }
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) {
    return ElemSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElemSet a, ElemSet b) = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order: by size, then lexicographic on the ascending element
// lists. For equal sizes the set holding the smallest element of the
// symmetric difference comes first.
inline bool canonical_less(ElemSet a, ElemSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct ElemSetHash {
  std::size_t operator()(ElemSet s) const noexcept {
    std::uint64_t x = s.bits() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

// "{0,2,5}"
inline std::string to_string(ElemSet s) {
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

#endif  // DMAT_ELEM_SET_HPP
