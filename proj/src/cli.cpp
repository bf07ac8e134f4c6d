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

#include "dmat/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dmat/derived.hpp"
#include "dmat/error.hpp"
#include "dmat/fieldrep.hpp"
#include "dmat/generators.hpp"
#include "dmat/json_io.hpp"
#include "dmat/oracle.hpp"

namespace dmat {
namespace {

// Circuit lists above this size get a two-iteration default, since a full
// derivation is rarely feasible there.
constexpr int kLargeUniverse = 24;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::string output_path;
  bool stdin_used = false;

  std::string read(const std::string& path) {
    if (path != "-") return read_file(path);
    if (stdin_used) throw UsageError("stdin can be read only once");
    stdin_used = true;
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  Json read_json(const std::string& path) {
    return parse_json(read(path), path == "-" ? "<stdin>" : path);
  }
  void emit(const std::string& text) {
    if (output_path.empty()) {
      out << text;
    } else {
      write_file(output_path, text);
    }
  }
  void emit(const Json& j) { emit(j.dump(2) + "\n"); }
};

int parse_nonneg(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size() || v < 0 || v > (1LL << 31)) throw std::out_of_range("");
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw UsageError(what + ": expected a non-negative integer, got \"" + text + "\"");
  }
}

// "iter=N,size=N,budget=N", any subset in any order.
Limits parse_limits(const std::string& text, bool& iter_given) {
  Limits limits;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--limits: expected key=value, got \"" + item + "\"");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "iter") {
      limits.max_iterations = parse_nonneg(value, "--limits iter");
      iter_given = true;
    } else if (key == "size") {
      limits.max_set_size = parse_nonneg(value, "--limits size");
    } else if (key == "budget") {
      try {
        limits.subset_budget = std::stoull(value);
      } catch (const std::logic_error&) {
        throw UsageError("--limits budget: expected an integer");
      }
    } else {
      throw UsageError("--limits: unknown key \"" + key + "\"");
    }
  }
  return limits;
}

// "Q", "7" or "7^2"; a quadratic field gets the default modulus.
FieldSpec parse_field(const std::string& text) {
  if (text == "Q") return FieldSpec::rational();
  const auto caret = text.find('^');
  Json j;
  j["p"] = parse_nonneg(text.substr(0, caret), "--field");
  if (caret != std::string::npos) {
    j["ext"] = parse_nonneg(text.substr(caret + 1), "--field extension degree");
  }
  return field_from_json(j);
}

bool is_matrix_json(const Json& j) { return j.is_object() && j.contains("entries"); }

// A matroid file, the output of ow-derive / longyear (its "derived" entry),
// or a matrix file whose circuit-vector derived matroid is taken.
Matroid comparable_matroid(const Json& j) {
  if (is_matrix_json(j)) return ow_derived(representation_from_json(j));
  if (j.is_object() && j.contains("derived")) return matroid_from_json(j["derived"]);
  return matroid_from_json(j);
}

Json circuit_list_json(const std::vector<ElemSet>& sets, const Matroid& m) {
  Json out = Json::array();
  for (ElemSet s : sets) {
    if (m.labels().empty()) {
      Json e = Json::array();
      s.for_each([&](int x) { e.push_back(x); });
      out.push_back(std::move(e));
    } else {
      out.push_back(circuit_label(m, s));
    }
  }
  return out;
}

int cmd_gen(Context& ctx, const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("gen: expected a matroid kind");
  const std::string& kind = args[0];
  auto expect = [&](std::size_t n) {
    if (args.size() != n + 1) {
      throw UsageError("gen " + kind + ": expected " + std::to_string(n) + " argument(s)");
    }
  };
  Matroid m;
  if (kind == "uniform") {
    expect(2);
    m = uniform(parse_nonneg(args[1], "k"), parse_nonneg(args[2], "n"));
  } else if (kind == "graphic") {
    expect(1);
    m = graphic(graph_from_json(ctx.read_json(args[1])));
  } else if (kind == "k4") {
    expect(0);
    m = graphic(k4_graph());
  } else if (kind == "vamos") {
    expect(0);
    m = vamos();
  } else if (kind == "q6") {
    expect(0);
    m = q6();
  } else if (kind == "fano") {
    expect(0);
    m = fano();
  } else if (kind == "non-fano") {
    expect(0);
    m = non_fano();
  } else {
    throw UsageError("gen: unknown kind \"" + kind + "\"");
  }
  ctx.emit(matroid_to_json(m));
  return kExitOk;
}

struct DeriveOptions {
  std::string input;
  std::string limits;
  bool stats = false;
  bool csv = false;
  bool timing = false;
  bool census = false;
  bool omit_sets = false;
};

int cmd_derive(Context& ctx, const DeriveOptions& o) {
  const Matroid m = matroid_from_json(ctx.read_json(o.input));
  bool iter_given = false;
  Limits limits = parse_limits(o.limits, iter_given);
  if (!iter_given && m.circuit_count() > kLargeUniverse) limits.max_iterations = 2;

  const DerivedResult r = derive_circuits(m, limits);
  if (o.csv) {
    ctx.emit(histogram_csv(size_histogram(r.circuits)));
    return r.complete ? kExitOk : kExitBudget;
  }
  Json j = derived_result_to_json(r, o.timing);
  if (o.omit_sets) j.erase("circuits");
  if (o.stats) {
    Json s = derived_stats_to_json(derived_stats(r));
    if (r.complete && r.universe <= SubsetBitmap::kMaxUniverse) {
      s["dependent_sets"] = count_upward_closure(r.circuits, r.universe);
    }
    j["stats"] = std::move(s);
  }
  // One iteration is exactly one extension step from A_0, so its census is
  // reported alongside.
  if (o.census || (iter_given && limits.max_iterations == 1)) {
    j["epsilon_census"] = census_to_json(epsilon_census_of_a0(m, limits.subset_budget), m);
  }
  ctx.emit(j);
  return r.complete ? kExitOk : kExitBudget;
}

int cmd_count_dependents(Context& ctx, const std::string& input) {
  const Json j = ctx.read_json(input);
  Json out;
  if (is_matrix_json(j)) {
    const Matroid d = ow_derived(representation_from_json(j));
    out["source"] = "circuit-vectors";
    out["universe"] = d.size();
    out["dependent_sets"] = count_dependent_sets(d);
    out["complete"] = true;
    ctx.emit(out);
    return kExitOk;
  }
  const Matroid m = matroid_from_json(j);
  if (m.circuit_count() > SubsetBitmap::kMaxUniverse) {
    throw Error(ErrorCode::kUniverseTooLarge,
                "count-dependents needs at most 25 circuits, got " +
                    std::to_string(m.circuit_count()));
  }
  const DerivedResult r = derive_circuits(m);
  out["source"] = "derived";
  out["universe"] = r.universe;
  out["dependent_sets"] = count_upward_closure(r.circuits, r.universe);
  out["complete"] = r.complete;
  ctx.emit(out);
  return r.complete ? kExitOk : kExitBudget;
}

Json derived_matroid_block(const Matroid& base, const Matroid& derived) {
  Json j;
  j["base"] = matroid_to_json(base);
  j["derived"] = matroid_to_json(derived);
  j["histogram"] = histogram_to_json(size_histogram(derived.circuits()));
  if (derived.size() <= SubsetBitmap::kMaxUniverse) {
    j["dependent_sets"] = count_dependent_sets(derived);
  }
  return j;
}

int cmd_ow_derive(Context& ctx, const std::string& input, bool csv) {
  const Representation r = representation_from_json(ctx.read_json(input));
  const Matroid base = matroid_from_matrix(r);
  const Matroid derived = ow_derived(r);
  if (csv) {
    ctx.emit(histogram_csv(size_histogram(derived.circuits())));
    return kExitOk;
  }
  Json j;
  j["field"] = field_to_json(spec_of(r.matrix));
  j["convention"] = std::string(convention_name(r.convention));
  j.update(derived_matroid_block(base, derived));
  ctx.emit(j);
  return kExitOk;
}

int cmd_longyear(Context& ctx, const std::string& matroid_path,
                 const std::string& matrix_path, bool csv) {
  const Matroid m = matroid_from_json(ctx.read_json(matroid_path));
  const Representation r = representation_from_json(ctx.read_json(matrix_path));
  const Matroid derived = longyear_derived(m, r);
  if (csv) {
    ctx.emit(histogram_csv(size_histogram(derived.circuits())));
    return kExitOk;
  }
  ctx.emit(derived_matroid_block(m, derived));
  return kExitOk;
}

int cmd_compare(Context& ctx, const std::string& a_path, const std::string& b_path) {
  const Matroid a = comparable_matroid(ctx.read_json(a_path));
  const Matroid b = comparable_matroid(ctx.read_json(b_path));
  const WeakOrder w = weak_order_compare(a, b);
  const auto by_canonical = [](ElemSet x, ElemSet y) { return canonical_less(x, y); };
  std::vector<ElemSet> only_a;
  std::vector<ElemSet> only_b;
  std::set_difference(a.circuits().begin(), a.circuits().end(), b.circuits().begin(),
                      b.circuits().end(), std::back_inserter(only_a), by_canonical);
  std::set_difference(b.circuits().begin(), b.circuits().end(), a.circuits().begin(),
                      a.circuits().end(), std::back_inserter(only_b), by_canonical);
  Json j;
  j["verdict"] = std::string(weak_order_name(w));
  j["circuits_a"] = a.circuit_count();
  j["circuits_b"] = b.circuit_count();
  j["shared"] = static_cast<std::size_t>(a.circuit_count()) - only_a.size();
  j["only_in_a"] = Json{{"count", only_a.size()},
                        {"histogram", histogram_to_json(size_histogram(only_a))},
                        {"sets", circuit_list_json(only_a, a)}};
  j["only_in_b"] = Json{{"count", only_b.size()},
                        {"histogram", histogram_to_json(size_histogram(only_b))},
                        {"sets", circuit_list_json(only_b, b)}};
  ctx.emit(j);
  return kExitOk;
}

int cmd_random_rep(Context& ctx, int k, int n, const std::string& field,
                   std::optional<std::uint64_t> seed) {
  if (!seed.has_value()) throw UsageError("random-rep: --seed is required");
  const Representation r = random_uniform_rep(k, n, parse_field(field), *seed);
  Json j = representation_to_json(r);
  j["seed"] = *seed;
  ctx.emit(j);
  return kExitOk;
}

int cmd_validate(Context& ctx, const std::string& input) {
  const Json j = ctx.read_json(input);
  std::vector<OracleReport> reports;
  if (j.is_object() && j.contains("sets")) {
    const LabeledAntichain a = antichain_from_json(j);
    reports.push_back(check_circuit_axioms(a.sets.members(), a.universe));
    if (a.universe <= 15) reports.push_back(check_dependent_axioms(
        [&] {
          SubsetBitmap b(a.universe);
          for (const CircuitSet& s : a.sets) b.set(s.empty() ? 0 : s.words()[0]);
          b.close_upward();
          return b.to_family();
        }(),
        a.universe));
  } else {
    Matroid m;
    if (is_matrix_json(j)) {
      m = matroid_from_matrix(representation_from_json(j));
    } else {
      // Raw circuit lists go to the oracle before from_circuits can reject
      // them, so that the report names the failing pair.
      const Json& circuits = j.at("circuits");
      std::vector<CircuitSet> sets;
      for (const Json& c : circuits) sets.push_back(CircuitSet::from_elements(c.get<std::vector<int>>()));
      OracleReport raw = check_circuit_axioms(sets, j.at("n").get<int>());
      if (!raw.passed) {
        Json out{{"reports", Json::array({report_to_json(raw)})}, {"passed", false}};
        ctx.emit(out);
        return kExitValidation;
      }
      m = matroid_from_json(j);
    }
    reports.push_back(check_circuit_axioms(m));
    if (m.circuit_count() <= 20) {
      try {
        reports.push_back(cross_check_derivation(m));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEngineDisagreement) throw;
        OracleReport r;
        r.check = "engine-agreement";
        r.passed = false;
        r.violations = 1;
        r.notes.push_back(e.what());
        reports.push_back(r);
      }
    }
  }
  bool passed = true;
  Json arr = Json::array();
  for (const OracleReport& r : reports) {
    passed = passed && r.passed;
    arr.push_back(report_to_json(r));
  }
  ctx.emit(Json{{"reports", std::move(arr)}, {"passed", passed}});
  return passed ? kExitOk : kExitValidation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Derived matroids: generation, derivation, representations"};
  app.name("dmat");
  app.require_subcommand(1);

  std::string output;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output, "write to this file instead of stdout");
  };

  std::vector<std::string> gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a matroid: uniform k n | graphic <graph.json> | k4 | vamos | q6 | fano | non-fano");
  gen->add_option("args", gen_args)->required();
  add_output(gen);

  DeriveOptions derive_opts;
  CLI::App* derive = app.add_subcommand("derive", "derived matroid by iterated extension");
  derive->add_option("matroid", derive_opts.input, "matroid JSON or -")->required();
  derive->add_option("--limits", derive_opts.limits, "iter=N,size=N,budget=N");
  derive->add_flag("--stats", derive_opts.stats, "add rank, connectivity and histograms");
  derive->add_flag("--csv", derive_opts.csv, "print the circuit-size histogram as CSV");
  derive->add_flag("--timing", derive_opts.timing, "include wall-clock times");
  derive->add_flag("--census", derive_opts.census, "census of one extension step from A0");
  derive->add_flag("--no-sets", derive_opts.omit_sets, "omit the circuit list");
  add_output(derive);

  std::string count_input;
  CLI::App* count = app.add_subcommand("count-dependents", "number of dependent sets of the derived matroid");
  count->add_option("file", count_input, "matroid or matrix JSON")->required();
  add_output(count);

  std::string ow_input;
  bool ow_csv = false;
  CLI::App* ow = app.add_subcommand("ow-derive", "derived matroid of circuit vectors");
  ow->add_option("matrix", ow_input, "matrix JSON or -")->required();
  ow->add_flag("--csv", ow_csv, "print the circuit-size histogram as CSV");
  add_output(ow);

  std::string ly_matroid;
  std::string ly_matrix;
  bool ly_csv = false;
  CLI::App* ly = app.add_subcommand("longyear", "binary derived matroid of circuit indicator vectors");
  ly->add_option("matroid", ly_matroid)->required();
  ly->add_option("gf2matrix", ly_matrix)->required();
  ly->add_flag("--csv", ly_csv, "print the circuit-size histogram as CSV");
  add_output(ly);

  std::string cmp_a;
  std::string cmp_b;
  CLI::App* cmp = app.add_subcommand("compare", "weak-order comparison of two matroids");
  cmp->add_option("a", cmp_a)->required();
  cmp->add_option("b", cmp_b)->required();
  add_output(cmp);

  int rr_k = 0;
  int rr_n = 0;
  std::string rr_field = "Q";
  std::optional<std::uint64_t> rr_seed;
  CLI::App* rr = app.add_subcommand("random-rep", "random representation of U(k, n)");
  rr->add_option("k", rr_k)->required();
  rr->add_option("n", rr_n)->required();
  rr->add_option("--field", rr_field, "Q, p or p^2");
  rr->add_option("--seed", rr_seed, "64-bit seed");
  add_output(rr);

  std::string val_input;
  CLI::App* val = app.add_subcommand("validate", "oracle reports for a matroid, antichain or matrix");
  val->add_option("file", val_input)->required();
  add_output(val);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Context ctx{in, out, output};
  try {
    if (*gen) return cmd_gen(ctx, gen_args);
    if (*derive) return cmd_derive(ctx, derive_opts);
    if (*count) return cmd_count_dependents(ctx, count_input);
    if (*ow) return cmd_ow_derive(ctx, ow_input, ow_csv);
    if (*ly) return cmd_longyear(ctx, ly_matroid, ly_matrix, ly_csv);
    if (*cmp) return cmd_compare(ctx, cmp_a, cmp_b);
    if (*rr) return cmd_random_rep(ctx, rr_k, rr_n, rr_field, rr_seed);
    if (*val) return cmd_validate(ctx, val_input);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kCombinatorialBudgetExceeded ? kExitBudget
                                                                : kExitValidation;
  } catch (const Json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace dmat
