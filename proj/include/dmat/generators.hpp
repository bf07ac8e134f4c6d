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

#ifndef DMAT_GENERATORS_HPP
#define DMAT_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dmat/elem_set.hpp"
#include "dmat/matroid.hpp"

namespace dmat {

// An undirected multigraph; edge i becomes ground element i.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> edge_labels;  // optional
};

// U(k, n): every (k+1)-subset is a circuit.
Matroid uniform(int k, int n);

// Circuits are the edge sets of simple cycles; a self-loop is a circuit of
// size one and a pair of parallel edges one of size two.
Matroid graphic(const Graph& g, std::uint64_t cycle_budget = 1'000'000);

// K4 on vertices a, b, c, d with edges ab, ac, ad, bc, bd, cd labelled 1..6.
Graph k4_graph();

// Rank-8 Vamos matroid on a..h: the four-circuits abcd, adef, adgh, bcef,
// bcgh and every five-set containing none of them.
Matroid vamos();

// Q6 on 1..6: circuits 123, 345 and every four-set containing neither.
Matroid q6();

// Rank-3 matroid whose non-trivial lines are `lines` (three-sets meeting
// pairwise in at most one point): circuits are the lines and all four-sets
// containing no line.
Matroid rank3_from_lines(int n, const std::vector<ElemSet>& lines,
                         std::vector<std::string> labels = {});

// Points 1..7; the non-Fano drops the line 246 of the Fano plane.
Matroid fano();
Matroid non_fano();

}  // namespace dmat

#endif  // DMAT_GENERATORS_HPP
