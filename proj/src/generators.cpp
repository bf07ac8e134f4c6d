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

#include "dmat/generators.hpp"

#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "dmat/error.hpp"

namespace dmat {
namespace {

// Calls fn on every k-subset of {0..n-1}.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ElemSet s;
    for (int i : idx) s.insert(i);
    fn(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::string> letter_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

std::vector<std::string> one_based_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

ElemSet parse_letters(const char* s) {
  ElemSet out;
  for (; *s != '\0'; ++s) out.insert(*s - 'a');
  return out;
}

ElemSet parse_digits(const char* s) {
  ElemSet out;
  for (; *s != '\0'; ++s) out.insert(*s - '1');
  return out;
}

bool contains_any(ElemSet s, const std::vector<ElemSet>& blocks) {
  for (ElemSet b : blocks) {
    if (b.is_subset_of(s)) return true;
  }
  return false;
}

class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {
    adj_.resize(g.vertices);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      auto [u, v] = g.edges[e];
      adj_[u].push_back({v, e});
      if (u != v) adj_[v].push_back({u, e});
    }
    on_path_.assign(g.vertices, false);
  }

  // Each cycle is rooted at its smallest vertex and found once per direction;
  // the edge-set hash removes the duplicate.
  std::vector<ElemSet> run() {
    for (int s = 0; s < g_.vertices; ++s) {
      root_ = s;
      on_path_[s] = true;
      extend(s, ElemSet{}, -1);
      on_path_[s] = false;
    }
    return {found_.begin(), found_.end()};
  }

 private:
  void record(ElemSet c) {
    if (found_.insert(c).second && found_.size() > budget_) {
      throw Error(ErrorCode::kCombinatorialBudgetExceeded,
                  "graph has more than " + std::to_string(budget_) +
                      " simple cycles");
    }
  }

  void extend(int v, ElemSet path, int last_edge) {
    for (auto [w, e] : adj_[v]) {
      if (e == last_edge || path.contains(e)) continue;
      if (w == root_) {
        record(path.with(e));
      } else if (w > root_ && !on_path_[w]) {
        on_path_[w] = true;
        extend(w, path.with(e), e);
        on_path_[w] = false;
      }
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<bool> on_path_;
  absl::flat_hash_set<ElemSet, ElemSetHash> found_;
  int root_ = 0;
};

}  // namespace

Matroid uniform(int k, int n) {
  if (n < 0 || n > 64) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "uniform matroid needs 0 <= n <= 64, got " + std::to_string(n));
  }
  if (k < 0 || k > n) {
    throw Error(ErrorCode::kParseError, "uniform matroid needs 0 <= k <= n, got k=" +
                                            std::to_string(k));
  }
  std::vector<ElemSet> circuits;
  for_each_k_subset(n, k + 1, [&](ElemSet s) { circuits.push_back(s); });
  return Matroid::from_circuits(n, circuits);
}

Matroid graphic(const Graph& g, std::uint64_t cycle_budget) {
  const int m = static_cast<int>(g.edges.size());
  if (m > 64) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "graph has " + std::to_string(m) + " edges; at most 64 supported");
  }
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges[e];
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) {
      throw Error(ErrorCode::kElementOutOfRange,
                  "edge " + std::to_string(e) + " has an endpoint outside 0.." +
                      std::to_string(g.vertices - 1));
    }
  }
  if (!g.edge_labels.empty() && static_cast<int>(g.edge_labels.size()) != m) {
    throw Error(ErrorCode::kParseError, "edge_labels must name every edge");
  }
  std::vector<ElemSet> cycles = CycleSearch(g, cycle_budget).run();
  return Matroid::from_circuits(m, cycles, false, g.edge_labels);
}

Graph k4_graph() {
  Graph g;
  g.vertices = 4;
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  g.edge_labels = one_based_labels(6);
  return g;
}

Matroid vamos() {
  std::vector<ElemSet> small;
  for (const char* s : {"abcd", "adef", "adgh", "bcef", "bcgh"}) {
    small.push_back(parse_letters(s));
  }
  std::vector<ElemSet> circuits = small;
  for_each_k_subset(8, 5, [&](ElemSet s) {
    if (!contains_any(s, small)) circuits.push_back(s);
  });
  return Matroid::from_circuits(8, circuits, false, letter_labels(8));
}

Matroid q6() {
  std::vector<ElemSet> small = {parse_digits("123"), parse_digits("345")};
  std::vector<ElemSet> circuits = small;
  for_each_k_subset(6, 4, [&](ElemSet s) {
    if (!contains_any(s, small)) circuits.push_back(s);
  });
  return Matroid::from_circuits(6, circuits, false, one_based_labels(6));
}

Matroid rank3_from_lines(int n, const std::vector<ElemSet>& lines,
                         std::vector<std::string> labels) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != 3) {
      throw Error(ErrorCode::kParseError, "line " + to_string(lines[i]) +
                                              " does not have three points");
    }
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if ((lines[i] & lines[j]).size() > 1) {
        throw Error(ErrorCode::kExchangeFails,
                    "lines " + to_string(lines[i]) + " and " +
                        to_string(lines[j]) + " share two points");
      }
    }
  }
  std::vector<ElemSet> circuits = lines;
  for_each_k_subset(n, 4, [&](ElemSet s) {
    if (!contains_any(s, lines)) circuits.push_back(s);
  });
  return Matroid::from_circuits(n, circuits, false, std::move(labels));
}

Matroid fano() {
  std::vector<ElemSet> lines;
  for (const char* s : {"123", "145", "167", "246", "257", "347", "356"}) {
    lines.push_back(parse_digits(s));
  }
  return rank3_from_lines(7, lines, one_based_labels(7));
}

Matroid non_fano() {
  std::vector<ElemSet> lines;
  for (const char* s : {"123", "145", "167", "257", "347", "356"}) {
    lines.push_back(parse_digits(s));
  }
  return rank3_from_lines(7, lines, one_based_labels(7));
}

}  // namespace dmat
