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

// JSON and CSV encodings of matroids, families, matrices and derivation
// results. Readers raise ParseError naming the offending field.

#ifndef DMAT_JSON_IO_HPP
#define DMAT_JSON_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dmat/derived.hpp"
#include "dmat/families.hpp"
#include "dmat/field.hpp"
#include "dmat/fieldrep.hpp"
#include "dmat/generators.hpp"
#include "dmat/matroid.hpp"
#include "json.hpp"

namespace dmat {

using Json = nlohmann::ordered_json;

// Parses JSON text; `source` names the input in diagnostics, which carry the
// line and column of a syntax error.
Json parse_json(const std::string& text, const std::string& source);
Json load_json_file(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// {"n": int, "labels": [str]?, "circuits": [[int]]}
Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j, bool validate_exchange = false);
Matroid load_matroid(const std::string& path, bool validate_exchange = false);
void save_matroid(const Matroid& m, const std::string& path);

// {"universe": int, "sets": [[int]]}
struct LabeledAntichain {
  int universe = 0;
  Antichain sets;
};
Json antichain_to_json(const Antichain& a, int universe);
LabeledAntichain antichain_from_json(const Json& j);

// {"vertices": int, "edges": [[u, v]], "labels": [str]?}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"p": int} | {"p": int, "ext": 2, "modulus": [c0, c1, 1]?} | "Q"
Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

// {"field": ..., "rows": int, "cols": int, "entries": [[str]],
//  "convention": "primal"|"dual"}
Json representation_to_json(const Representation& r);
Representation representation_from_json(const Json& j);

// Base matroid, circuits of the derived matroid with depths and witnesses,
// trace and completeness. Wall-clock times only when `timing` is set, so
// that identical inputs give identical bytes.
Json derived_result_to_json(const DerivedResult& r, bool timing);
Json derived_stats_to_json(const DerivedStats& s);
Json census_to_json(const EpsilonCensus& c, const Matroid& base);

std::map<int, std::size_t> size_histogram(const std::vector<ElemSet>& sets);
std::map<int, std::size_t> size_histogram(const Antichain& sets);
Json histogram_to_json(const std::map<int, std::size_t>& h);
// "size,count" header then one row per size, ascending.
std::string histogram_csv(const std::map<int, std::size_t>& h);

}  // namespace dmat

#endif  // DMAT_JSON_IO_HPP
