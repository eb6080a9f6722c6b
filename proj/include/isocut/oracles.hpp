#pragma once

#include <optional>
#include <vector>

#include "isocut/graph.hpp"
#include "isocut/isolating.hpp"
#include "isocut/maxflow.hpp"

// Brute-force and classical baselines. Nothing here reuses the cut extraction
// of the isolating-cut or separation code.
namespace isocut::oracles {

/// Global minimum cut by maximum-adjacency orderings. A disconnected graph
/// yields the component of vertex 0 with weight 0. Throws InvalidInput if n < 2.
Cut stoer_wagner(const WeightedGraph& g);

/// Fix s = lowest terminal and take the best of the |T|-1 s-t cuts.
Cut naive_steiner(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& terminals,
                  FlowMeter& meter);

/// One flow per v in R with R \ {v} contracted to the sink. Only `cuts` and
/// `phase_b` (the |R| calls) are filled.
IsolatingCutResult naive_isolating(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& r,
                                   FlowMeter& meter);

struct CutConstraint {
  enum class Kind { global, st, separation, isolating, terminal_split };
  Kind kind = Kind::global;
  VertexSet a;  // st: {s}; separation: A; isolating: R; terminal_split: T
  VertexSet b;  // st: {t}; separation: B
  VertexId v = -1;  // isolating: the terminal kept on the side

  static CutConstraint global();
  static CutConstraint st(int n, VertexId s, VertexId t);
  static CutConstraint separation(VertexSet a, VertexSet b);
  static CutConstraint isolating(VertexSet r, VertexId v);
  static CutConstraint terminal_split(VertexSet t);
};

inline constexpr int kMaxEnumerationVertices = 20;

/// Minimum cut under the constraint over all sides, ties broken by fewer
/// vertices and then by the lexicographically smallest bitset. For global and
/// terminal_split, sides never contain vertex n-1. Throws InvalidInput if
/// n > 20 or n < 2; returns nullopt when no side is feasible.
std::optional<Cut> enumerate_cuts(const WeightedGraph& g, const CutConstraint& c);

/// Every feasible side of minimum weight, in ascending bitset order.
std::vector<Cut> enumerate_min_cuts(const WeightedGraph& g, const CutConstraint& c);

}  // namespace isocut::oracles
