#pragma once

#include <vector>

#include "isocut/graph.hpp"
#include "isocut/maxflow.hpp"
#include "isocut/parallel.hpp"

namespace isocut {

struct Bipartition {
  VertexSet a;
  VertexSet b;
};

/// ceil(lg |R|) bipartitions of R separating every pair. Members of R get
/// labels 0..|R|-1 in ascending id order; bipartition i puts labels with bit i
/// clear in `a` and set in `b`. Throws InvalidInput if |R| < 2.
std::vector<Bipartition> bipartition_schedule(const VertexSet& r);

struct IsolatingCut {
  VertexId terminal;
  Cut cut;             // minimal side S_v with S_v ∩ R = {v}
  VertexSet component; // C_v, the component of v after removing F
};

struct IsolatingCutResult {
  std::vector<IsolatingCut> cuts;  // ascending terminal id
  std::vector<char> removed;       // F: union of the phase-A cut edges
  std::vector<VertexSet> components;  // components of G \ F
  FlowMeter phase_a;  // one standalone call per bipartition
  FlowMeter phase_b;  // one flow per terminal, recorded as a single batch

  const IsolatingCut& at(VertexId v) const;
  /// First cut of minimum weight in terminal order.
  const IsolatingCut& lightest() const;
};

/// Minimum isolating cuts for R with ceil(lg|R|) separation flows plus one
/// batch of flows on the contracted components. `meter` receives the phase-A
/// calls as standalone entries and phase B as one batch.
IsolatingCutResult minimum_isolating_cuts(const MaxFlowEngine& engine, const WeightedGraph& g,
                                          const VertexSet& r, FlowMeter& meter,
                                          Execution exec = Execution::serial);

/// G with V \ C contracted into one sink. The vertices of C keep their
/// ascending order as ids 0..|C|-1; the sink is id |C|.
WeightedGraph component_instance(const WeightedGraph& g, const VertexSet& component,
                                 std::vector<VertexId>& local_to_global);

int ceil_log2(long long x);

}  // namespace isocut
