// Command-line front end: isocut <subcommand> [options]
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "isocut/bench.hpp"
#include "isocut/errors.hpp"
#include "isocut/expander.hpp"
#include "isocut/generators.hpp"
#include "isocut/graph_io.hpp"
#include "isocut/isolating.hpp"
#include "isocut/maxflow.hpp"
#include "isocut/oracles.hpp"
#include "isocut/splitters.hpp"
#include "isocut/steiner.hpp"

using json = nlohmann::ordered_json;
using namespace isocut;

namespace {

struct Globals {
  std::string graph;
  std::string format = "edgelist";
  bool json = false;
  std::uint64_t seed = 1;
  std::string phi;
  int k = 0;
  long long budget_const = 1;
  std::string engine = "dinic";
  bool parallel = false;
  int rand_reps = 0;
  bool no_fallback = false;
  bool lambda_oracle = false;
};

json ids(const VertexSet& s) { return json(s.members()); }

json meter_json(const FlowMeter& m) {
  return json{{"calls", m.call_count()},
              {"amortized_calls", m.amortized_calls()},
              {"batches", m.batch_count()},
              {"aggregate_vertices", m.aggregate_vertices()},
              {"aggregate_edges", m.aggregate_edges()}};
}

json trace_json(const Trace& t) {
  json j{{"method", t.method},       {"lambda_exact", t.lambda_exact}, {"fallback_used", t.fallback_used},
         {"disconnected", t.disconnected}};
  if (t.method == "det") {
    j["budget"] = t.budget;
    j["within_budget"] = t.within_budget;
    json gs = json::array();
    for (const auto& g : t.guesses) {
      json rounds = json::array();
      for (const auto& r : g.rounds)
        rounds.push_back(json{{"lambda_tilde", r.lambda_tilde},
                              {"u", r.u_size},
                              {"u_next", r.next_size},
                              {"clusters", r.clusters},
                              {"inter_cluster_weight", r.inter_cluster_weight},
                              {"unbalanced_calls", r.unbalanced_calls},
                              {"unbalanced_reused", r.unbalanced_reused},
                              {"decomposition_failed", r.decomposition_failed},
                              {"halved", r.halved}});
      gs.push_back(json{{"lambda_tilde", g.lambda_tilde},
                        {"u_trajectory", g.u_trajectory},
                        {"rounds", rounds},
                        {"fallback", g.fallback},
                        {"aborted", g.aborted},
                        {"final_pairs", g.final_pairs},
                        {"final_reused", g.final_reused},
                        {"best_after", g.best_after}});
    }
    j["guesses"] = gs;
  }
  if (t.method == "rand") {
    j["samples"] = t.rand_samples;
    j["skipped"] = t.rand_skipped;
  }
  return j;
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

WeightedGraph load(const Globals& g, DimacsProblem* keep = nullptr) {
  if (g.graph.empty()) throw InvalidInput("--graph is required");
  DimacsProblem p = read_graph_file(g.graph, parse_format(g.format));
  if (keep) *keep = p;
  return p.graph;
}

VertexSet parse_terminals(const std::string& text, int n) {
  VertexSet t(n);
  if (text.empty()) return VertexSet::full(n);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw InvalidInput("");
      t.insert(v);
    } catch (const std::exception&) {
      throw InvalidInput("bad terminal '" + item + "'");
    }
  }
  return t;
}

AlgoConfig config(const Globals& g) {
  AlgoConfig cfg;
  if (!g.phi.empty()) cfg.phi = parse_ratio(g.phi);
  if (g.k > 0) cfg.k = g.k;
  cfg.budget_const = g.budget_const;
  cfg.seed = g.seed;
  if (g.rand_reps > 0) cfg.rand_reps = g.rand_reps;
  cfg.fallback_enabled = !g.no_fallback;
  cfg.lambda_mode = g.lambda_oracle ? LambdaMode::oracle : LambdaMode::guess;
  cfg.exec = g.parallel ? Execution::parallel : Execution::serial;
  cfg.validate();
  return cfg;
}

json report_json(const CutReport& r) {
  return json{{"side", ids(r.best_cut.side)},
              {"weight", r.best_cut.weight},
              {"lambda", r.lambda},
              {"meter", meter_json(r.meter)},
              {"trace", trace_json(r.trace)}};
}

std::string report_text(const CutReport& r) {
  std::ostringstream os;
  os << "weight " << r.lambda << "\nside";
  for (auto v : r.best_cut.side.members()) os << ' ' << v;
  os << "\ncalls " << r.meter.call_count() << " (amortized " << r.meter.amortized_calls() << ")\n";
  if (r.trace.method == "det")
    os << "budget " << r.trace.budget << (r.trace.within_budget ? " (within)" : " (exceeded or fallback)") << '\n';
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Minimum cuts and Steiner cuts from few max-flow calls"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--graph", g.graph, "Input graph file")->envname("ISOCUT_GRAPH");
  app.add_option("--format", g.format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--seed", g.seed, "Seed for generators and the randomized method");
  app.add_option("--phi", g.phi, "Expansion parameter, e.g. 1/16");
  app.add_option("--k", g.k, "Unbalanced-case threshold (default ceil((1+1/phi)^3))");
  app.add_option("--budget-const", g.budget_const, "Expander budget constant c_b");
  app.add_option("--engine", g.engine, "dinic or edmonds-karp");
  app.add_flag("--parallel", g.parallel, "Run independent flows on OpenMP threads");
  app.add_option("--rand-reps", g.rand_reps, "Samples per scale for the randomized method");
  app.add_flag("--no-fallback", g.no_fallback, "Disable the naive fallback in the det method");
  app.add_flag("--lambda-oracle", g.lambda_oracle, "Use Stoer-Wagner for the estimate when T = V");
  app.fallthrough();

  // gen
  GeneratorSpec spec;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--kind", spec.kind, "gnp-weighted|planted-cut|dumbbell|cycle|clique|grid")
      ->check(CLI::IsMember({"gnp-weighted", "planted-cut", "dumbbell", "cycle", "clique", "grid"}));
  gen->add_option("--n", spec.n, "Vertex count");
  gen->add_option("--p", spec.p, "Edge probability");
  gen->add_option("--min-weight", spec.min_weight);
  gen->add_option("--max-weight", spec.max_weight);
  gen->add_option("--side", spec.side, "Planted side size");
  gen->add_option("--cross", spec.cross, "Planted cut weight");
  gen->add_option("--rows", spec.rows);
  gen->add_option("--cols", spec.cols);
  gen->add_option("--out", out_path, "Output file (default stdout)");

  // maxflow
  int source = -1, sink = -1;
  auto* mf = app.add_subcommand("maxflow", "s-t max-flow and minimal min-cut side");
  mf->add_option("--source,-s", source);
  mf->add_option("--sink,-t", sink);

  // isolating
  std::string terminals;
  bool naive_iso = false;
  auto* iso = app.add_subcommand("isolating", "Minimum isolating cuts for a terminal set");
  iso->add_option("--terminals", terminals, "Comma-separated vertex ids")->required();
  iso->add_flag("--naive", naive_iso, "One flow per terminal instead");

  // splitter-gen
  int fam_n = 8, fam_k = 2;
  bool verify = false, min2 = false, functions = false;
  auto* sg = app.add_subcommand("splitter-gen", "Splitter and isolator families");
  sg->add_option("--n", fam_n)->required();
  sg->add_option("--k", fam_k)->required();
  sg->add_flag("--verify", verify, "Exhaustive check (n <= 63)");
  sg->add_flag("--min2", min2, "Variant without sets of size < 2");
  sg->add_flag("--functions", functions, "Emit the splitter functions instead of the isolator family");

  // expander-decomp
  std::string demands_path;
  auto* ed = app.add_subcommand("expander-decomp", "Expander decomposition");
  ed->add_option("--demands", demands_path, "File with n nonnegative integers (default 1 each)");

  // mincut / steiner
  std::string method = "det";
  auto* mc = app.add_subcommand("mincut", "Global minimum cut");
  mc->add_option("--method", method)->check(CLI::IsMember({"det", "rand", "stoer-wagner", "naive"}));
  auto* st = app.add_subcommand("steiner", "Steiner minimum cut");
  st->add_option("--terminals", terminals, "Comma-separated vertex ids (default all)");
  st->add_option("--method", method)->check(CLI::IsMember({"det", "rand", "naive"}));

  // verify
  auto* vf = app.add_subcommand("verify", "Cross-check every method on one graph");
  vf->add_option("--terminals", terminals, "Comma-separated vertex ids (default all)");

  // bench
  std::string family = "dumbbell", sizes = "16,32,64", methods = "det,naive", csv_path, json_path;
  auto* bn = app.add_subcommand("bench", "Call-count comparison");
  bn->add_option("--family", family, "Generator kind for the instances (ignored with --graph)");
  bn->add_option("--sizes", sizes, "Comma-separated n values");
  bn->add_option("--methods", methods, "Comma-separated: det,rand,naive,stoer-wagner");
  bn->add_option("--csv", csv_path, "Also write CSV here");
  bn->add_option("--json-out", json_path, "Also write JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto engine = make_engine(g.engine);

  if (gen->parsed()) {
    spec.seed = g.seed;
    WeightedGraph graph = generate(spec);
    std::ostringstream os;
    if (parse_format(g.format) == GraphFormat::dimacs)
      write_dimacs(os, graph);
    else
      write_edgelist(os, graph);
    if (out_path.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(out_path);
      if (!f) throw InvalidInput("cannot write " + out_path);
      f << os.str();
      if (g.json) std::cout << json{{"n", graph.n()}, {"m", graph.m()}, {"out", out_path}}.dump(2) << '\n';
    }
    return 0;
  }

  if (sg->parsed()) {
    json j{{"n", fam_n}, {"k", fam_k}};
    std::ostringstream text;
    if (functions) {
      SplitterFamily f = splitter_family(fam_n, fam_k);
      json fs = json::array();
      const char* names[] = {"constant", "identity", "residue", "residue_hash"};
      for (const auto& fn : f.functions)
        fs.push_back(json{{"kind", names[static_cast<int>(fn.kind)]},
                          {"prime", fn.prime},
                          {"multiplier", fn.multiplier},
                          {"range", fn.range}});
      j["functions"] = fs;
      j["size"] = f.functions.size();
      j["size_bound"] = f.size_bound;
      j["threshold"] = f.threshold;
      j["prime_count"] = f.prime_count;
      if (verify) j["verified"] = verify_splitter(f);
      text << f.functions.size() << " functions (bound " << f.size_bound << ")";
      if (verify) text << (j["verified"].get<bool>() ? ", verified" : ", VERIFICATION FAILED");
      text << '\n';
    } else {
      SetFamily f = min2 ? isolator_family_min2(fam_n, fam_k) : isolator_family(fam_n, fam_k);
      json sets = json::array();
      for (const auto& s : f.sets) sets.push_back(ids(s));
      j["provenance"] = to_string(f.provenance);
      j["size"] = f.sets.size();
      j["size_bound"] = f.size_bound;
      j["bound_formula"] = f.bound_formula;
      j["sets"] = sets;
      bool ok = f.verified;
      if (verify) ok = verify_isolator(f, fam_k, min2 ? 2 : 0);
      j["verified"] = ok;
      text << f.sets.size() << " sets, " << to_string(f.provenance) << ", bound " << f.size_bound << " ("
           << f.bound_formula << ")" << (verify ? (ok ? ", verified" : ", VERIFICATION FAILED") : "") << '\n';
      if (verify && !ok) {
        emit(g, j, text.str());
        return 3;
      }
    }
    emit(g, j, text.str());
    return 0;
  }

  if (bn->parsed()) {
    AlgoConfig cfg = config(g);
    std::vector<BenchInstance> instances;
    if (!g.graph.empty()) {
      WeightedGraph graph = load(g);
      instances.push_back({g.graph, graph, VertexSet::full(graph.n())});
    } else {
      std::stringstream ss(sizes);
      std::string item;
      while (std::getline(ss, item, ',')) {
        GeneratorSpec s;
        s.kind = family;
        s.n = std::stoi(item);
        s.seed = g.seed;
        if (family == "planted-cut") s.side = s.n / 3;
        if (family == "gnp-weighted") s.max_weight = 100;
        WeightedGraph graph = generate(s);
        instances.push_back({family + "-" + item, graph, VertexSet::full(graph.n())});
      }
    }
    std::vector<std::string> ms;
    std::stringstream ss(methods);
    std::string item;
    while (std::getline(ss, item, ',')) ms.push_back(item);
    BenchReport rep = run_bench(*engine, instances, ms, cfg);
    if (!csv_path.empty()) std::ofstream(csv_path) << rep.to_csv();
    if (!json_path.empty()) std::ofstream(json_path) << rep.to_json();
    if (g.json)
      std::cout << rep.to_json() << '\n';
    else
      std::cout << rep.to_csv();
    return rep.exact_methods_agree() ? 0 : 3;
  }

  DimacsProblem problem;
  WeightedGraph graph = load(g, &problem);

  if (mf->parsed()) {
    if (source < 0 && problem.source) source = *problem.source;
    if (sink < 0 && problem.sink) sink = *problem.sink;
    if (source < 0 || sink < 0) throw InvalidInput("source and sink are required");
    FlowMeter meter;
    FlowResult fr = max_flow(*engine, graph, source, sink, meter);
    std::ostringstream text;
    text << "value " << fr.value << "\nmin_side";
    for (auto v : fr.min_side.members()) text << ' ' << v;
    text << '\n';
    emit(g, json{{"value", fr.value}, {"min_side", ids(fr.min_side)}, {"meter", meter_json(meter)}}, text.str());
    return 0;
  }

  if (iso->parsed()) {
    VertexSet r = parse_terminals(terminals, graph.n());
    FlowMeter meter;
    IsolatingCutResult res = naive_iso ? oracles::naive_isolating(*engine, graph, r, meter)
                                       : minimum_isolating_cuts(*engine, graph, r, meter, config(g).exec);
    json cuts = json::array();
    std::ostringstream text;
    for (const auto& c : res.cuts) {
      json o{{"terminal", c.terminal}, {"side", ids(c.cut.side)}, {"weight", c.cut.weight}};
      if (!naive_iso) o["component"] = ids(c.component);
      cuts.push_back(o);
      text << c.terminal << ": weight " << c.cut.weight << ", side";
      for (auto v : c.cut.side.members()) text << ' ' << v;
      text << '\n';
    }
    text << "calls " << meter.call_count() << " (amortized " << meter.amortized_calls() << ")\n";
    emit(g,
         json{{"cuts", cuts},
              {"meter", meter_json(meter)},
              {"phase_a", meter_json(res.phase_a)},
              {"phase_b", meter_json(res.phase_b)}},
         text.str());
    return 0;
  }

  if (ed->parsed()) {
    Ratio phi = g.phi.empty() ? Ratio(1, 16) : parse_ratio(g.phi);
    std::vector<Weight> d(static_cast<std::size_t>(graph.n()), 1);
    if (!demands_path.empty()) {
      std::ifstream f(demands_path);
      if (!f) throw InvalidInput("cannot read " + demands_path);
      for (auto& x : d)
        if (!(f >> x)) throw InvalidInput("demand file needs " + std::to_string(graph.n()) + " integers");
    }
    ExpanderOptions opts;
    opts.budget_const = g.budget_const;
    ExpanderDecomposition dec = expander_decompose(graph, DemandVector(d), phi, opts);
    json clusters = json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < dec.clusters.size(); ++i) {
      clusters.push_back(json{{"vertices", ids(dec.clusters[i])}, {"certified", dec.certified[i] != 0}});
      text << "cluster " << i << (dec.certified[i] ? " (certified):" : " (heuristic):");
      for (auto v : dec.clusters[i].members()) text << ' ' << v;
      text << '\n';
    }
    text << "inter-cluster weight " << dec.inter_cluster_weight << ", budget " << dec.budget(graph.n()).to_string()
         << '\n';
    emit(g,
         json{{"phi", phi.to_string()},
              {"clusters", clusters},
              {"inter_cluster_weight", dec.inter_cluster_weight},
              {"budget", dec.budget(graph.n()).to_string()},
              {"splits", dec.splits},
              {"augmented_demands", dec.augmented.values()}},
         text.str());
    return 0;
  }

  if (mc->parsed() || st->parsed()) {
    VertexSet t = mc->parsed() ? VertexSet::full(graph.n()) : parse_terminals(terminals, graph.n());
    AlgoConfig cfg = config(g);
    CutReport rep;
    if (method == "det") {
      rep = steiner_mincut_det(*engine, graph, t, cfg);
    } else if (method == "rand") {
      rep = steiner_mincut_rand(*engine, graph, t, cfg);
    } else if (method == "naive") {
      rep.best_cut = oracles::naive_steiner(*engine, graph, t, rep.meter);
      rep.lambda = rep.best_cut.weight;
      rep.trace.method = "naive";
    } else {
      rep.best_cut = oracles::stoer_wagner(graph);
      rep.lambda = rep.best_cut.weight;
      rep.trace.method = "stoer-wagner";
    }
    emit(g, report_json(rep), report_text(rep));
    return 0;
  }

  if (vf->parsed()) {
    VertexSet t = parse_terminals(terminals, graph.n());
    AlgoConfig cfg = config(g);
    json j;
    FlowMeter m;
    const Weight naive = oracles::naive_steiner(*engine, graph, t, m).weight;
    const Weight det = steiner_mincut_det(*engine, graph, t, cfg).lambda;
    const Weight rnd = steiner_mincut_rand(*engine, graph, t, cfg).lambda;
    j["naive"] = naive;
    j["det"] = det;
    j["rand"] = rnd;
    bool agree = naive == det;
    if (t.size() == graph.n()) {
      j["stoer-wagner"] = oracles::stoer_wagner(graph).weight;
      agree = agree && j["stoer-wagner"].get<Weight>() == naive;
    }
    if (graph.n() <= oracles::kMaxEnumerationVertices) {
      auto e = oracles::enumerate_cuts(graph, oracles::CutConstraint::terminal_split(t));
      j["enumeration"] = e->weight;
      agree = agree && e->weight == naive;
    }
    j["rand_matches"] = rnd == naive;
    j["agree"] = agree;
    std::ostringstream text;
    for (auto& [key, val] : j.items()) text << key << ' ' << val.dump() << '\n';
    emit(g, j, text.str());
    return agree ? 0 : 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DecompositionFailure& e) {
    std::cerr << "decomposition failed: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
