#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isocut/graph.hpp"
#include "isocut/maxflow.hpp"
#include "isocut/steiner.hpp"

namespace isocut {

struct BenchInstance {
  std::string name;
  WeightedGraph graph;
  VertexSet terminals;  // T = V for global min cut instances
};

struct BenchRow {
  std::string instance;
  std::string method;
  int n = 0;
  int m = 0;
  int terminals = 0;
  bool ok = true;
  std::string error;
  Weight weight = 0;
  long long calls = 0;            // raw max-flow solves
  long long amortized_calls = 0;  // batches of component flows count once
  long long aggregate_vertices = 0;
  long long aggregate_edges = 0;
  long long budget = 0;           // det only
  bool fallback = false;          // det only
  std::optional<double> ratio_vs_naive;  // amortized calls over the naive row
  double wall_ms = 0;

  bool operator==(const BenchRow&) const = default;
};

/// Rows ordered by instance index, then method name.
struct BenchReport {
  static constexpr int kSchema = 1;
  std::vector<BenchRow> rows;

  /// Exact methods (det, naive, stoer-wagner) agree per instance.
  bool exact_methods_agree() const;

  std::string to_json() const;
  /// Columns in the order of kCsvColumns; fields never contain commas.
  std::string to_csv() const;
  static BenchReport from_json(const std::string& text);
  static BenchReport from_csv(const std::string& text);

  bool operator==(const BenchReport&) const = default;
};

inline constexpr const char* kCsvColumns =
    "instance,method,n,m,terminals,ok,error,weight,calls,amortized_calls,aggregate_vertices,"
    "aggregate_edges,budget,fallback,ratio_vs_naive,wall_ms";

/// Methods: det, rand, naive, stoer-wagner (T = V only). A method that throws
/// leaves a row with ok = false.
BenchReport run_bench(const MaxFlowEngine& engine, const std::vector<BenchInstance>& instances,
                      std::vector<std::string> methods, const AlgoConfig& cfg);

}  // namespace isocut
