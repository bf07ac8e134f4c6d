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

#include "dmat/json_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>

#include "dmat/error.hpp"

namespace dmat {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

long long get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long long>();
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

const Json& get_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

Json elements_json(ElemSet s) {
  Json out = Json::array();
  s.for_each([&](int e) { out.push_back(e); });
  return out;
}

Json elements_json(const CircuitSet& s) {
  Json out = Json::array();
  s.for_each([&](int e) { out.push_back(e); });
  return out;
}

// Elements are range-checked against `limit`; duplicates are an error.
std::vector<int> int_list(const Json& j, const std::string& where, int limit) {
  std::vector<int> out;
  const Json& arr = get_array(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    long long v = get_int(arr[i], at(where, i));
    if (v < 0 || v >= limit) {
      throw Error(ErrorCode::kElementOutOfRange,
                  at(where, i) + ": element " + std::to_string(v) +
                      " outside 0.." + std::to_string(limit - 1));
    }
    for (int seen : out) {
      if (seen == v) fail(at(where, i), "repeated element " + std::to_string(v));
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::string> labels_from(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  const Json& arr = get_array(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(get_string(arr[i], at(where, i)));
  }
  return out;
}

// Smallest quadratic non-residue g gives the modulus a^2 - g; for p = 2 the
// only irreducible quadratic a^2 + a + 1.
FieldSpec default_quadratic(std::uint32_t p) {
  if (p == 2) return FieldSpec::quadratic(2, 1, 1);
  GFp f(p);
  for (std::uint32_t g = 2; g < p; ++g) {
    if (f.pow(g, (p - 1) / 2) == p - 1) return FieldSpec::quadratic(p, p - g, 0);
  }
  throw Error(ErrorCode::kInvalidField, "no quadratic non-residue mod " +
                                            std::to_string(p));
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1,
                                                   text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::kParseError, source + ":" + std::to_string(line) +
                                            ":" + std::to_string(col) +
                                            ": malformed JSON");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParseError, path + ": cannot write file");
  out << text;
}

Json load_json_file(const std::string& path) {
  return parse_json(read_file(path), path);
}

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["n"] = m.size();
  if (!m.labels().empty()) j["labels"] = m.labels();
  Json circuits = Json::array();
  for (ElemSet c : m.circuits()) circuits.push_back(elements_json(c));
  j["circuits"] = std::move(circuits);
  return j;
}

Matroid matroid_from_json(const Json& j, bool validate_exchange) {
  const long long n = get_int(field(j, "n", "matroid"), "matroid.n");
  if (n < 0) fail("matroid.n", "must be non-negative");
  if (n > 64) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "matroid.n: " + std::to_string(n) + " exceeds 64");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = labels_from(j["labels"], "matroid.labels");
  const Json& arr = get_array(field(j, "circuits", "matroid"), "matroid.circuits");
  std::vector<ElemSet> circuits;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::vector<int> elems = int_list(arr[i], at("matroid.circuits", i),
                                      static_cast<int>(n));
    if (elems.empty()) {
      throw Error(ErrorCode::kEmptyCircuit,
                  at("matroid.circuits", i) + ": empty circuit");
    }
    ElemSet c;
    for (int e : elems) c.insert(e);
    circuits.push_back(c);
  }
  return Matroid::from_circuits(static_cast<int>(n), std::move(circuits),
                                validate_exchange, std::move(labels));
}

Matroid load_matroid(const std::string& path, bool validate_exchange) {
  return matroid_from_json(load_json_file(path), validate_exchange);
}

void save_matroid(const Matroid& m, const std::string& path) {
  write_file(path, matroid_to_json(m).dump(2) + "\n");
}

Json antichain_to_json(const Antichain& a, int universe) {
  Json j;
  j["universe"] = universe;
  Json sets = Json::array();
  for (const CircuitSet& s : a) sets.push_back(elements_json(s));
  j["sets"] = std::move(sets);
  return j;
}

LabeledAntichain antichain_from_json(const Json& j) {
  const long long u = get_int(field(j, "universe", "antichain"), "antichain.universe");
  if (u < 0 || u > CircuitSet::kMaxUniverse) {
    throw Error(ErrorCode::kUniverseTooLarge,
                "antichain.universe: " + std::to_string(u) + " out of range");
  }
  const Json& arr = get_array(field(j, "sets", "antichain"), "antichain.sets");
  std::vector<CircuitSet> sets;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::vector<int> elems =
        int_list(arr[i], at("antichain.sets", i), static_cast<int>(u));
    sets.push_back(CircuitSet::from_elements(elems));
  }
  return {static_cast<int>(u), Antichain::minimal_of(std::move(sets))};
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  if (!g.edge_labels.empty()) j["labels"] = g.edge_labels;
  return j;
}

Graph graph_from_json(const Json& j) {
  Graph g;
  const long long v = get_int(field(j, "vertices", "graph"), "graph.vertices");
  if (v < 0) fail("graph.vertices", "must be non-negative");
  g.vertices = static_cast<int>(v);
  const Json& arr = get_array(field(j, "edges", "graph"), "graph.edges");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = at("graph.edges", i);
    const Json& e = get_array(arr[i], where);
    if (e.size() != 2) fail(where, "an edge has two endpoints");
    g.edges.emplace_back(static_cast<int>(get_int(e[0], at(where, 0))),
                         static_cast<int>(get_int(e[1], at(where, 1))));
  }
  if (j.contains("labels")) g.edge_labels = labels_from(j["labels"], "graph.labels");
  return g;
}

Json field_to_json(const FieldSpec& f) {
  switch (f.kind) {
    case FieldSpec::Kind::kRational:
      return "Q";
    case FieldSpec::Kind::kPrime:
      return Json{{"p", f.p}};
    case FieldSpec::Kind::kQuadratic:
      return Json{{"p", f.p}, {"ext", 2}, {"modulus", Json::array({f.c0, f.c1, 1})}};
  }
  return nullptr;
}

FieldSpec field_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return FieldSpec::rational();
    fail("field", "expected \"Q\" or an object");
  }
  const long long p = get_int(field(j, "p", "field"), "field.p");
  if (p < 2 || p > (1LL << 31)) {
    throw Error(ErrorCode::kInvalidField, "field.p: " + std::to_string(p) +
                                              " is not a prime <= 2^31");
  }
  long long ext = 1;
  if (j.contains("ext")) ext = get_int(j["ext"], "field.ext");
  if (j.contains("modulus")) {
    const Json& mod = get_array(j["modulus"], "field.modulus");
    if (!j.contains("ext")) ext = static_cast<long long>(mod.size()) - 1;
    if (static_cast<long long>(mod.size()) != ext + 1) {
      fail("field.modulus", "needs ext + 1 coefficients, lowest degree first");
    }
  }
  if (ext == 1) {
    GFp check(static_cast<std::uint64_t>(p));
    return FieldSpec::prime(static_cast<std::uint32_t>(p));
  }
  if (ext != 2) {
    throw Error(ErrorCode::kInvalidField,
                "field.ext: only degrees 1 and 2 are supported");
  }
  FieldSpec spec;
  if (j.contains("modulus")) {
    const Json& mod = j["modulus"];
    long long c[3];
    for (int i = 0; i < 3; ++i) {
      c[i] = get_int(mod[i], at("field.modulus", i));
      c[i] %= p;
      if (c[i] < 0) c[i] += p;
    }
    if (c[2] != 1) fail("field.modulus", "leading coefficient must be 1");
    spec = FieldSpec::quadratic(static_cast<std::uint32_t>(p),
                                static_cast<std::uint32_t>(c[0]),
                                static_cast<std::uint32_t>(c[1]));
  } else {
    GFp check(static_cast<std::uint64_t>(p));
    spec = default_quadratic(static_cast<std::uint32_t>(p));
  }
  GFp2 check(spec.p, spec.c0, spec.c1);
  return spec;
}

Json representation_to_json(const Representation& r) {
  Json j;
  j["field"] = field_to_json(spec_of(r.matrix));
  const int rows = rows_of(r.matrix);
  const int cols = cols_of(r.matrix);
  j["rows"] = rows;
  j["cols"] = cols;
  Json entries = Json::array();
  for (int i = 0; i < rows; ++i) {
    Json row = Json::array();
    for (int c = 0; c < cols; ++c) row.push_back(format_entry(r.matrix, i, c));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  j["convention"] = std::string(convention_name(r.convention));
  return j;
}

Representation representation_from_json(const Json& j) {
  const FieldSpec spec = field_from_json(field(j, "field", "matrix"));
  const long long rows = get_int(field(j, "rows", "matrix"), "matrix.rows");
  const long long cols = get_int(field(j, "cols", "matrix"), "matrix.cols");
  if (rows < 0 || cols < 0) fail("matrix", "negative dimensions");
  if (cols > 64) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "matrix.cols: " + std::to_string(cols) + " exceeds 64");
  }
  const Json& entries = get_array(field(j, "entries", "matrix"), "matrix.entries");
  if (static_cast<long long>(entries.size()) != rows) {
    fail("matrix.entries", "expected " + std::to_string(rows) + " rows");
  }
  Representation r{make_matrix(spec, static_cast<int>(rows), static_cast<int>(cols)),
                   Convention::kPrimal};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = at("matrix.entries", i);
    const Json& row = get_array(entries[i], where);
    if (static_cast<long long>(row.size()) != cols) {
      fail(where, "expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string text;
      if (row[c].is_number_integer()) {
        text = std::to_string(row[c].get<long long>());
      } else {
        text = get_string(row[c], at(where, c));
      }
      try {
        set_entry(r.matrix, static_cast<int>(i), static_cast<int>(c), text);
      } catch (const Error& e) {
        fail(at(where, c), e.what());
      }
    }
  }
  if (j.contains("convention")) {
    const std::string conv = get_string(j["convention"], "matrix.convention");
    if (conv == "primal") {
      r.convention = Convention::kPrimal;
    } else if (conv == "dual") {
      r.convention = Convention::kDual;
    } else {
      fail("matrix.convention", "expected \"primal\" or \"dual\"");
    }
  }
  return r;
}

std::map<int, std::size_t> size_histogram(const std::vector<ElemSet>& sets) {
  std::map<int, std::size_t> h;
  for (ElemSet s : sets) ++h[s.size()];
  return h;
}

std::map<int, std::size_t> size_histogram(const Antichain& sets) {
  std::map<int, std::size_t> h;
  for (const CircuitSet& s : sets) ++h[s.size()];
  return h;
}

Json histogram_to_json(const std::map<int, std::size_t>& h) {
  Json out = Json::array();
  for (auto [size, count] : h) out.push_back(Json{{"size", size}, {"count", count}});
  return out;
}

std::string histogram_csv(const std::map<int, std::size_t>& h) {
  std::string out = "size,count\n";
  for (auto [size, count] : h) {
    out += std::to_string(size) + "," + std::to_string(count) + "\n";
  }
  return out;
}

Json derived_result_to_json(const DerivedResult& r, bool timing) {
  Json j;
  j["base"] = matroid_to_json(r.base);
  j["universe"] = r.universe;
  Json element_labels = Json::array();
  for (ElemSet c : r.base.circuits()) element_labels.push_back(circuit_label(r.base, c));
  j["element_labels"] = std::move(element_labels);
  j["complete"] = r.complete;

  Json trace;
  trace["engine"] = r.trace.engine;
  trace["max_iterations"] = r.trace.max_iterations;
  trace["max_set_size"] = r.trace.max_set_size;
  trace["fixpoint"] = r.trace.fixpoint;
  Json its = Json::array();
  for (const IterationRecord& it : r.trace.iterations) {
    Json rec{{"index", it.index}, {"size", it.size}, {"new_sets", it.new_sets}};
    if (timing) rec["wall_seconds"] = it.wall_seconds;
    its.push_back(std::move(rec));
  }
  trace["iterations"] = std::move(its);
  j["trace"] = std::move(trace);

  j["histogram"] = histogram_to_json(size_histogram(r.circuits));
  Json circuits = Json::array();
  const auto& members = r.circuits.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    Json c{{"set", elements_json(members[i])}, {"depth", r.depths[i]}};
    if (i < r.witnesses.size() && r.witnesses[i].has_value()) {
      const Witness& w = *r.witnesses[i];
      c["witness"] = Json{{"b1", elements_json(w.b1)},
                          {"b2", elements_json(w.b2)},
                          {"c", w.c}};
    }
    circuits.push_back(std::move(c));
  }
  j["circuits"] = std::move(circuits);
  return j;
}

Json derived_stats_to_json(const DerivedStats& s) {
  Json j;
  j["size_histogram"] = histogram_to_json(s.size_histogram);
  Json depth = Json::array();
  for (auto [d, count] : s.depth_histogram) {
    depth.push_back(Json{{"depth", d}, {"count", count}});
  }
  j["depth_histogram"] = std::move(depth);
  j["rank"] = s.rank;
  j["base_nullity"] = s.base_nullity;
  j["rank_gap"] = s.rank_gap;
  j["components"] = s.components;
  j["connected"] = s.connected;
  j["elements_in_triangles"] = s.elements_in_triangles;
  j["every_element_in_triangle"] = s.every_element_in_triangle;
  j["fundamental_circuits_form_basis"] = s.fundamental_circuits_form_basis;
  j["complete"] = s.complete;
  return j;
}

Json census_to_json(const EpsilonCensus& c, const Matroid& base) {
  Json j;
  Json a0 = Json::array();
  for (auto [size, count] : c.a0_by_size) a0.push_back(Json{{"size", size}, {"count", count}});
  j["a0_by_size"] = std::move(a0);
  Json classes = Json::array();
  for (const ProductClass& pc : c.classes) {
    std::map<int, std::size_t> by_support;
    std::map<int, std::size_t> new_by_support;
    for (const CircuitSet& s : pc.products) ++by_support[support_of(base, s).size()];
    for (const CircuitSet& s : pc.new_products) ++new_by_support[support_of(base, s).size()];
    Json sup = Json::array();
    for (auto [size, count] : by_support) sup.push_back(Json{{"support", size}, {"count", count}});
    Json nsup = Json::array();
    for (auto [size, count] : new_by_support) nsup.push_back(Json{{"support", size}, {"count", count}});
    classes.push_back(Json{{"size1", pc.size1},
                           {"size2", pc.size2},
                           {"product_size", pc.product_size},
                           {"products", pc.products.size()},
                           {"products_by_support", std::move(sup)},
                           {"new_products", pc.new_products.size()},
                           {"new_by_support", std::move(nsup)}});
  }
  j["classes"] = std::move(classes);
  return j;
}

}  // namespace dmat
