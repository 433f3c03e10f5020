#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "urm/bipartite_permutation.hpp"
#include "urm/errors.hpp"
#include "urm/instances.hpp"
#include "urm/interval_urm.hpp"
#include "urm/io.hpp"
#include "urm/oracle.hpp"
#include "urm/proper_interval.hpp"

namespace urm::cli {
namespace {

using json = nlohmann::json;

constexpr const char* kSchema = "v1";

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string out;
};

struct Loaded {
  UndirectedGraph graph;
  std::optional<VertexOrdering> order;
  std::optional<IntervalRep> rep;
};

bool has_suffix(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

Loaded load_graph(const std::string& path) {
  const std::string text = read_file(path);
  Loaded l;
  if (has_suffix(path, ".ivg")) {
    l.rep = parse_ivg(text);
    l.graph = intersection_graph(normalize_intervals(*l.rep));
  } else {
    auto gf = parse_graph(text);
    l.graph = std::move(gf.graph);
    l.order = std::move(gf.order);
  }
  return l;
}

void emit(const Globals& g, std::ostream& out, const std::string& text) {
  if (g.out.empty()) {
    out << text;
  } else {
    write_file(g.out, text);
  }
}

json edges_json(const Matching& m) {
  json arr = json::array();
  for (const Edge& e : m.canonical().edges) arr.push_back({e.a, e.b});
  return arr;
}

std::string format_cycle(const AlternatingCycle& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) os << (i ? " " : "") << c.vertices[i];
  return os.str();
}

std::string format_pair(const std::pair<Edge, Edge>& p) {
  return std::to_string(p.first.a) + "-" + std::to_string(p.first.b) + " " +
         std::to_string(p.second.a) + "-" + std::to_string(p.second.b);
}

VertexOrdering require_order(const Loaded& l, const std::string& cls) {
  if (l.order) return *l.order;
  if (l.rep && cls == "proper-interval") return ordering_from_proper_rep(*l.rep);
  throw ValidationError("class " + cls + " needs a .graph input with an 'order:' line");
}

// ---------------------------------------------------------------- solve

struct SolveOptions {
  std::string cls;
  std::string input;
  bool verify = false;
  bool force = false;
  bool trust_ordering = false;
  std::string sis_guard = "lower";
};

SisGuard parse_guard(const std::string& name) {
  return name == "bracketed" ? SisGuard::kBracketed : SisGuard::kLower;
}

using Check = std::pair<std::string, bool>;

std::vector<Check> verify_matching(const SolveOptions& o, const Loaded& l, const Matching& m) {
  std::vector<Check> checks;
  checks.emplace_back("c4free", is_ur_c4free(l.graph, m));
  if (m.size() * 2 <= static_cast<std::size_t>(kOracleMaxVertices)) {
    checks.emplace_back("oracle", is_ur_oracle(l.graph, m));
  }
  if (o.cls == "proper-interval") {
    const ProperContext ctx(l.graph, require_order(l, o.cls));
    checks.emplace_back("consecutive", is_ur_consecutive(l.graph, ctx.ordering(), m,
                                                         [&](const Edge& e, const Edge& f) {
                                                           return ctx.pair_is_ur(e, f);
                                                         }));
  } else if (o.cls == "bip-perm") {
    const BipPermContext ctx(l.graph, require_order(l, o.cls), o.trust_ordering);
    checks.emplace_back("consecutive", is_ur_consecutive(l.graph, ctx.ordering(), m,
                                                         [&](const Edge& e, const Edge& f) {
                                                           return ctx.pair_is_ur(e, f);
                                                         }));
  } else if (o.cls == "interval" && l.graph.edge_count() <= kReductionCheckMaxEdges) {
    // The output itself plus every one-edge extension of it.
    const EdgeNestMap map = build_nest_from_intervals(*l.rep, l.graph);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < map.edges.size(); ++i) {
      if (std::find(m.edges.begin(), m.edges.end(), map.edges[i]) != m.edges.end()) chosen.push_back(i);
    }
    std::vector<std::vector<std::size_t>> samples{chosen};
    for (std::size_t i = 0; i < map.edges.size(); ++i) {
      if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
      samples.push_back(chosen);
      samples.back().push_back(i);
    }
    checks.emplace_back("reduction", reduction_faithful(*l.rep, l.graph, samples));
  }
  if (o.cls == "interval" && l.graph.edge_count() <= kBruteforceMaxEdges) {
    checks.emplace_back("bruteforce-size", max_urm_bruteforce(l.graph).size() == m.size());
  }
  return checks;
}

int cmd_solve(const SolveOptions& o, const Globals& g, std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;
  json report{{"schema", kSchema}, {"command", "solve"}, {"class", o.cls}, {"input", o.input}};
  std::string text;

  if (o.cls == "nest-sis") {
    if (!has_suffix(o.input, ".nest")) throw ValidationError("class nest-sis needs a .nest input");
    const NestRep rep = parse_nest(read_file(o.input));
    const auto set = max_sis(rep, parse_guard(o.sis_guard));
    if (o.verify) {
      checks.emplace_back("strong-independent", is_strong_independent(rep, set));
      if (rep.size() <= static_cast<std::size_t>(kSisBruteforceMaxVertices)) {
        checks.emplace_back("bruteforce-size", max_sis_bruteforce(rep).size() == set.size());
      }
    }
    text = format_vertex_set(set);
    report["size"] = set.size();
    report["vertices"] = set;
  } else {
    const Loaded l = load_graph(o.input);
    Matching m;
    if (o.cls == "proper-interval") {
      m = solve_proper(l.graph, require_order(l, o.cls));
    } else if (o.cls == "bip-perm") {
      m = solve_bipperm(l.graph, require_order(l, o.cls), o.trust_ordering);
    } else {
      if (!l.rep) throw ValidationError("class interval needs an .ivg input");
      m = solve_interval_urm(*l.rep, o.force ? SIZE_MAX : kIntervalUrmDefaultMaxEdges,
                             parse_guard(o.sis_guard));
    }
    if (o.verify) checks = verify_matching(o, l, m);
    text = format_matching(m);
    report["size"] = m.size();
    report["edges"] = edges_json(m);
  }

  bool all_pass = true;
  if (o.verify) {
    json v = json::object();
    for (const auto& [name, ok] : checks) {
      err << "verify " << name << ": " << (ok ? "pass" : "FAIL") << '\n';
      v[name] = ok;
      all_pass = all_pass && ok;
    }
    report["verification"] = v;
  }
  emit(g, out, g.format == "json" ? report.dump() + "\n" : text);
  if (!all_pass) {
    err << "error: solver output failed verification\n";
    return kInternalFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string input;
  std::string matching;
  std::string method = "oracle";
  std::string cls;
  bool trust_ordering = false;
};

int cmd_verify(const VerifyOptions& o, const Globals& g, std::ostream& out) {
  const Loaded l = load_graph(o.input);
  const Matching m = parse_matching(read_file(o.matching));
  for (const Edge& e : m.edges) {
    if (e.b >= l.graph.vertex_count()) {
      throw InvalidInput("matching vertex " + std::to_string(e.b) + " is not in the graph");
    }
  }
  if (!is_matching(l.graph, m)) throw InvalidInput("edge set is not a matching");

  bool ur = false;
  std::string witness;
  if (o.method == "oracle") {
    ur = is_ur_oracle(l.graph, m);
    if (!ur && l.graph.vertex_count() <= kCycleEnumerationMaxVertices) {
      const auto cycles = enumerate_alternating_cycles(l.graph, m, static_cast<std::size_t>(l.graph.vertex_count()));
      if (!cycles.empty()) witness = "cycle " + format_cycle(cycles.front());
    }
  } else if (o.method == "pairwise") {
    const auto pair = find_alt_c4_pair(l.graph, m);
    ur = !pair;
    if (pair) witness = "pair " + format_pair(*pair);
  } else {
    const std::string cls = o.cls.empty() ? "proper-interval" : o.cls;
    std::optional<std::pair<Edge, Edge>> pair;
    if (cls == "proper-interval") {
      const ProperContext ctx(l.graph, require_order(l, cls));
      pair = find_consecutive_violation(l.graph, ctx.ordering(), m,
                                        [&](const Edge& e, const Edge& f) { return ctx.pair_is_ur(e, f); });
    } else {
      const BipPermContext ctx(l.graph, require_order(l, cls), o.trust_ordering);
      pair = find_consecutive_violation(l.graph, ctx.ordering(), m,
                                        [&](const Edge& e, const Edge& f) { return ctx.pair_is_ur(e, f); });
    }
    ur = !pair;
    if (pair) witness = "pair " + format_pair(*pair);
  }

  if (g.format == "json") {
    json j{{"schema", kSchema}, {"command", "verify"}, {"method", o.method}, {"ur", ur}};
    if (!witness.empty()) j["witness"] = witness;
    emit(g, out, j.dump() + "\n");
  } else {
    std::string text = "method " + o.method + ": " + (ur ? "uniquely restricted" : "not uniquely restricted") + "\n";
    if (!witness.empty()) text += "witness " + witness + "\n";
    emit(g, out, text);
  }
  return ur ? kOk : kVerifiedFalse;
}

// ---------------------------------------------------------------- oracle

int cmd_oracle(const std::string& input, const Globals& g, std::ostream& out) {
  const Loaded l = load_graph(input);
  const Matching m = max_urm_bruteforce(l.graph);
  if (g.format == "json") {
    json j{{"schema", kSchema}, {"command", "oracle"}, {"size", m.size()}, {"edges", edges_json(m)}};
    emit(g, out, j.dump() + "\n");
  } else {
    emit(g, out, format_matching(m));
  }
  return kOk;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::string kind;
  Vertex n = 0;
  int k = 0;
  Vertex p = 0;
  Vertex q = 0;
  Coord span = -1;
  Coord length = 100;
  std::string matching_out;
};

int cmd_gen(const GenOptions& o, const Globals& g, std::ostream& out) {
  const Coord span = o.span >= 0 ? o.span : 25 * static_cast<Coord>(o.n);
  if (o.kind == "unit-intervals") {
    emit(g, out, format_ivg(gen_unit_intervals(o.n, g.seed, span, o.length)));
  } else if (o.kind == "intervals") {
    emit(g, out, format_ivg(gen_intervals(o.n, g.seed, span, o.length)));
  } else if (o.kind == "nest") {
    emit(g, out, format_nest(gen_nest(o.n, g.seed, o.span >= 0 ? o.span : 4 * static_cast<Coord>(o.n))));
  } else if (o.kind == "bip-perm") {
    Vertex p = o.p, q = o.q;
    if (p == 0 && q == 0) {
      p = o.n / 2;
      q = o.n - p;
    }
    const auto inst = gen_bipperm(p, q, g.seed);
    emit(g, out, format_graph(inst.graph, &inst.order));
  } else {
    const auto fam = gen_family(o.k);
    emit(g, out, format_graph(fam.graph));
    if (!o.matching_out.empty()) write_file(o.matching_out, format_matching(fam.matching));
  }
  return kOk;
}

// ---------------------------------------------------------------- demo

std::string labeled_edges(const Matching& m) {
  std::string s;
  for (const Edge& e : m.canonical().edges) {
    s += (s.empty() ? "" : " ") + std::to_string(e.a + 1) + "-" + std::to_string(e.b + 1);
  }
  return s;
}

int cmd_demo(const Globals& g, std::ostream& out) {
  const auto f = fig1();
  const Matching solved = solve_proper(f.graph, f.order);
  const Matching base = consecutive_heuristic_baseline(f.graph, f.order);
  if (g.format == "json") {
    json j{{"schema", kSchema},
           {"command", "demo"},
           {"instance", "fig1"},
           {"solver", {{"size", solved.size()}, {"edges", edges_json(solved)}}},
           {"baseline-per-caption", {{"size", base.size()}, {"edges", edges_json(base)}}}};
    emit(g, out, j.dump() + "\n");
    return kOk;
  }
  std::ostringstream os;
  os << "instance fig1: " << f.graph.vertex_count() << " vertices, " << f.graph.edge_count()
     << " edges, labels 1..7 in proper order\n";
  os << "solver (proper-interval): size " << solved.size() << ": " << labeled_edges(solved) << '\n';
  os << "baseline-per-caption (consecutive-vertex edges only): size " << base.size() << ": "
     << labeled_edges(base) << '\n';
  emit(g, out, os.str());
  return kOk;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  std::string cls;
  std::string sizes;
  int repeat = 3;
  bool trust_ordering = true;
};

std::vector<long long> parse_schedule(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(1, "bad size '" + tok + "' in schedule");
    }
    if (used != tok.size() || v < 0) throw ParseError(1, "bad size '" + tok + "' in schedule");
    out.push_back(v);
  }
  return out;
}

template <typename F>
double best_ms(int repeat, F&& f) {
  double best = 0;
  for (int r = 0; r < std::max(repeat, 1); ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    if (r == 0 || dt.count() < best) best = dt.count();
  }
  return best;
}

int cmd_bench(const BenchOptions& o, const Globals& g, std::ostream& out) {
  const auto schedule = parse_schedule(o.sizes);
  std::ostringstream os;
  if (g.format != "json") os << kSchema << " bench class=" << o.cls << " seed=" << g.seed << '\n';
  for (long long size : schedule) {
    if (size == 0) continue;
    const auto n = static_cast<Vertex>(size);
    std::size_t vertices = 0, edges = 0, result = 0;
    double ms = 0;
    if (o.cls == "proper-interval") {
      const auto rep = gen_unit_intervals(n, g.seed, 25 * static_cast<Coord>(n), 100);
      const auto graph = intersection_graph(rep);
      const auto ord = ordering_from_proper_rep(rep);
      ms = best_ms(o.repeat, [&] { result = solve_proper(graph, ord).size(); });
      vertices = n;
      edges = graph.edge_count();
    } else if (o.cls == "bip-perm") {
      const auto inst = gen_bipperm(std::max<Vertex>(1, n / 2), std::max<Vertex>(1, n - n / 2), g.seed);
      ms = best_ms(o.repeat, [&] { result = solve_bipperm(inst.graph, inst.order, o.trust_ordering).size(); });
      vertices = static_cast<std::size_t>(inst.graph.vertex_count());
      edges = inst.graph.edge_count();
    } else if (o.cls == "interval") {
      // Size is the target edge count: grow n until m reaches it.
      IntervalRep rep;
      UndirectedGraph graph;
      for (Vertex k = 1;; ++k) {
        rep = gen_intervals(k, g.seed, 25 * static_cast<Coord>(k), 100);
        graph = intersection_graph(rep);
        if (graph.edge_count() >= static_cast<std::size_t>(size)) break;
      }
      ms = best_ms(o.repeat, [&] { result = solve_interval_urm(rep, SIZE_MAX).size(); });
      vertices = rep.size();
      edges = graph.edge_count();
    } else {
      const auto rep = gen_nest(n, g.seed, 4 * static_cast<Coord>(n));
      ms = best_ms(o.repeat, [&] { result = max_sis(rep).size(); });
      vertices = rep.size();
    }
    if (g.format == "json") {
      json j{{"schema", kSchema}, {"command", "bench"}, {"class", o.cls}, {"seed", g.seed},
             {"n", vertices},     {"m", edges},         {"size", result},  {"time_ms", ms}};
      os << j.dump() << '\n';
    } else {
      os << "n=" << vertices << " m=" << edges << " size=" << result << " time_ms=" << ms << '\n';
    }
  }
  emit(g, out, os.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum uniquely restricted matchings on structured graph classes", "urm"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", globals.seed, "Generator seed");
  app.add_option("--out", globals.out, "Write the main output to FILE instead of stdout");

  const std::vector<std::string> classes{"proper-interval", "bip-perm", "interval", "nest-sis"};

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "Maximum UR matching (or strong independent set)");
  solve->add_option("--class", so.cls)->required()->check(CLI::IsMember(classes));
  solve->add_option("--input", so.input)->required();
  solve->add_flag("--verify", so.verify, "Re-check the output");
  solve->add_flag("--force", so.force, "Lift the interval edge bound");
  solve->add_flag("--trust-ordering", so.trust_ordering, "Skip the cubic transitive-ordering check");
  solve->add_option("--sis-guard", so.sis_guard, "Window guard of the nest DP")
      ->check(CLI::IsMember({"lower", "bracketed"}));

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Check that a matching is uniquely restricted");
  verify->add_option("--input", vo.input)->required();
  verify->add_option("--matching", vo.matching)->required();
  verify->add_option("--method", vo.method)->check(CLI::IsMember({"oracle", "pairwise", "consecutive"}));
  verify->add_option("--class", vo.cls)->check(CLI::IsMember({"proper-interval", "bip-perm"}));
  verify->add_flag("--trust-ordering", vo.trust_ordering);

  std::string oracle_input;
  auto* oracle = app.add_subcommand("oracle", "Brute-force maximum UR matching (m <= 24)");
  oracle->add_option("--input", oracle_input)->required();

  GenOptions go;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", go.kind)
      ->required()
      ->check(CLI::IsMember({"unit-intervals", "intervals", "bip-perm", "family", "nest"}));
  gen->add_option("--n", go.n)->check(CLI::NonNegativeNumber);
  gen->add_option("--k", go.k);
  gen->add_option("--p", go.p)->check(CLI::NonNegativeNumber);
  gen->add_option("--q", go.q)->check(CLI::NonNegativeNumber);
  gen->add_option("--span", go.span);
  gen->add_option("--length", go.length, "Interval length (maximum length for 'intervals')");
  gen->add_option("--matching-out", go.matching_out, "family: also write M here");

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "Built-in demonstration");
  demo->add_option("name", demo_name)->required()->check(CLI::IsMember({"fig1"}));

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "Time solvers over a size schedule");
  bench->add_option("--class", bo.cls)->required()->check(CLI::IsMember(classes));
  bench->add_option("--sizes", bo.sizes, "Comma-separated sizes (edges for 'interval')")->required();
  bench->add_option("--repeat", bo.repeat, "Best-of repetitions");

  std::vector<std::string> argv_store{"urm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  }

  try {
    if (*solve) return cmd_solve(so, globals, out, err);
    if (*verify) return cmd_verify(vo, globals, out);
    if (*oracle) return cmd_oracle(oracle_input, globals, out);
    if (*gen) return cmd_gen(go, globals, out);
    if (*demo) return cmd_demo(globals, out);
    if (*bench) return cmd_bench(bo, globals, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const BoundError& e) {
    err << "refused: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalFailure;
  } catch (const Error& e) {
    // I/O failures: treat like unreadable input.
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalFailure;
  }
  return kInternalFailure;
}

}  // namespace urm::cli
