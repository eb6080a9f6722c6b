#include "isocut/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include <json.hpp>

#include "isocut/errors.hpp"
#include "isocut/oracles.hpp"

namespace isocut {

namespace {

bool exact_method(const std::string& m) { return m == "det" || m == "naive" || m == "stoer-wagner"; }

void fill_meter(BenchRow& row, const FlowMeter& meter) {
  row.calls = meter.call_count();
  row.amortized_calls = meter.amortized_calls();
  row.aggregate_vertices = meter.aggregate_vertices();
  row.aggregate_edges = meter.aggregate_edges();
}

BenchRow run_one(const MaxFlowEngine& engine, const BenchInstance& inst, const std::string& method,
                 const AlgoConfig& cfg) {
  BenchRow row;
  row.instance = inst.name;
  row.method = method;
  row.n = inst.graph.n();
  row.m = inst.graph.m();
  row.terminals = inst.terminals.size();
  const auto start = std::chrono::steady_clock::now();
  try {
    if (method == "det") {
      CutReport r = steiner_mincut_det(engine, inst.graph, inst.terminals, cfg);
      row.weight = r.lambda;
      fill_meter(row, r.meter);
      row.budget = r.trace.budget;
      row.fallback = r.trace.fallback_used;
    } else if (method == "rand") {
      CutReport r = steiner_mincut_rand(engine, inst.graph, inst.terminals, cfg);
      row.weight = r.lambda;
      fill_meter(row, r.meter);
    } else if (method == "naive") {
      FlowMeter meter;
      row.weight = oracles::naive_steiner(engine, inst.graph, inst.terminals, meter).weight;
      fill_meter(row, meter);
    } else if (method == "stoer-wagner") {
      if (inst.terminals.size() != inst.graph.n()) throw InvalidInput("stoer-wagner needs T = V");
      row.weight = oracles::stoer_wagner(inst.graph).weight;
    } else {
      throw InvalidInput("unknown method '" + method + "'");
    }
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
    std::replace(row.error.begin(), row.error.end(), ',', ';');
    std::replace(row.error.begin(), row.error.end(), '\n', ' ');
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

BenchReport run_bench(const MaxFlowEngine& engine, const std::vector<BenchInstance>& instances,
                      std::vector<std::string> methods, const AlgoConfig& cfg) {
  std::sort(methods.begin(), methods.end());
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
  BenchReport report;
  for (const auto& inst : instances) {
    const std::size_t first = report.rows.size();
    for (const auto& m : methods) report.rows.push_back(run_one(engine, inst, m, cfg));
    const BenchRow* naive = nullptr;
    for (std::size_t i = first; i < report.rows.size(); ++i)
      if (report.rows[i].method == "naive" && report.rows[i].ok) naive = &report.rows[i];
    if (naive && naive->amortized_calls > 0)
      for (std::size_t i = first; i < report.rows.size(); ++i)
        if (report.rows[i].ok && report.rows[i].method != "stoer-wagner")
          report.rows[i].ratio_vs_naive =
              static_cast<double>(report.rows[i].amortized_calls) / static_cast<double>(naive->amortized_calls);
  }
  return report;
}

bool BenchReport::exact_methods_agree() const {
  std::map<std::string, Weight> seen;
  for (const auto& r : rows) {
    if (!r.ok || !exact_method(r.method)) continue;
    auto [it, fresh] = seen.emplace(r.instance, r.weight);
    if (!fresh && it->second != r.weight) return false;
  }
  return true;
}

std::string BenchReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["instance"] = r.instance;
    o["method"] = r.method;
    o["n"] = r.n;
    o["m"] = r.m;
    o["terminals"] = r.terminals;
    o["ok"] = r.ok;
    o["error"] = r.error;
    o["weight"] = r.weight;
    o["calls"] = r.calls;
    o["amortized_calls"] = r.amortized_calls;
    o["aggregate_vertices"] = r.aggregate_vertices;
    o["aggregate_edges"] = r.aggregate_edges;
    o["budget"] = r.budget;
    o["fallback"] = r.fallback;
    o["ratio_vs_naive"] = r.ratio_vs_naive ? nlohmann::ordered_json(*r.ratio_vs_naive) : nlohmann::ordered_json();
    o["wall_ms"] = r.wall_ms;
    j["rows"].push_back(std::move(o));
  }
  return j.dump(2);
}

BenchReport BenchReport::from_json(const std::string& text) {
  BenchReport out;
  try {
    auto j = nlohmann::json::parse(text);
    if (j.at("schema").get<int>() != kSchema) throw InvalidInput("unsupported bench schema");
    for (const auto& o : j.at("rows")) {
      BenchRow r;
      r.instance = o.at("instance").get<std::string>();
      r.method = o.at("method").get<std::string>();
      r.n = o.at("n").get<int>();
      r.m = o.at("m").get<int>();
      r.terminals = o.at("terminals").get<int>();
      r.ok = o.at("ok").get<bool>();
      r.error = o.at("error").get<std::string>();
      r.weight = o.at("weight").get<Weight>();
      r.calls = o.at("calls").get<long long>();
      r.amortized_calls = o.at("amortized_calls").get<long long>();
      r.aggregate_vertices = o.at("aggregate_vertices").get<long long>();
      r.aggregate_edges = o.at("aggregate_edges").get<long long>();
      r.budget = o.at("budget").get<long long>();
      r.fallback = o.at("fallback").get<bool>();
      if (!o.at("ratio_vs_naive").is_null()) r.ratio_vs_naive = o.at("ratio_vs_naive").get<double>();
      r.wall_ms = o.at("wall_ms").get<double>();
      out.rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad bench JSON: ") + e.what());
  }
  return out;
}

std::string BenchReport::to_csv() const {
  std::ostringstream os;
  os << kCsvColumns << '\n';
  for (const auto& r : rows) {
    os << r.instance << ',' << r.method << ',' << r.n << ',' << r.m << ',' << r.terminals << ','
       << (r.ok ? 1 : 0) << ',' << r.error << ',' << r.weight << ',' << r.calls << ',' << r.amortized_calls << ','
       << r.aggregate_vertices << ',' << r.aggregate_edges << ',' << r.budget << ',' << (r.fallback ? 1 : 0)
       << ',' << (r.ratio_vs_naive ? fmt_double(*r.ratio_vs_naive) : "") << ',' << fmt_double(r.wall_ms)
       << '\n';
  }
  return os.str();
}

BenchReport BenchReport::from_csv(const std::string& text) {
  BenchReport out;
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kCsvColumns) throw InvalidInput("bench CSV header mismatch");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto f = split(line, ',');
    if (f.size() != 16) throw InvalidInput("bench CSV row has " + std::to_string(f.size()) + " fields");
    try {
      BenchRow r;
      r.instance = f[0];
      r.method = f[1];
      r.n = std::stoi(f[2]);
      r.m = std::stoi(f[3]);
      r.terminals = std::stoi(f[4]);
      r.ok = f[5] == "1";
      r.error = f[6];
      r.weight = std::stoll(f[7]);
      r.calls = std::stoll(f[8]);
      r.amortized_calls = std::stoll(f[9]);
      r.aggregate_vertices = std::stoll(f[10]);
      r.aggregate_edges = std::stoll(f[11]);
      r.budget = std::stoll(f[12]);
      r.fallback = f[13] == "1";
      if (!f[14].empty()) r.ratio_vs_naive = std::stod(f[14]);
      r.wall_ms = std::stod(f[15]);
      out.rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw InvalidInput("bad bench CSV row: " + line);
    }
  }
  return out;
}

}  // namespace isocut
