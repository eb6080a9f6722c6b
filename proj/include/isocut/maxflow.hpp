#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "isocut/graph.hpp"

namespace isocut {

struct FlowResult {
  Weight value = 0;
  /// Vertices reachable from s in the final residual graph: the inclusion-wise
  /// minimal source side among all minimum s-t cuts.
  VertexSet min_side;
};

/// Exact s-t max-flow on an undirected graph (each edge is a pair of opposite
/// arcs of equal capacity). Implementations keep no state between calls and
/// are deterministic.
class MaxFlowEngine {
 public:
  virtual ~MaxFlowEngine() = default;
  virtual std::string name() const = 0;
  virtual FlowResult solve(const WeightedGraph& g, VertexId s, VertexId t) const = 0;
};

/// Blocking-flow (Dinic) engine; the default.
class DinicEngine final : public MaxFlowEngine {
 public:
  std::string name() const override { return "dinic"; }
  FlowResult solve(const WeightedGraph& g, VertexId s, VertexId t) const override;
};

/// Shortest-augmenting-path engine, kept for cross-checking.
class EdmondsKarpEngine final : public MaxFlowEngine {
 public:
  std::string name() const override { return "edmonds-karp"; }
  FlowResult solve(const WeightedGraph& g, VertexId s, VertexId t) const override;
};

std::unique_ptr<MaxFlowEngine> make_engine(const std::string& name);

/// Counts max-flow invocations and their instance sizes.
///
/// Every solve is one entry in the log. Entries recorded through
/// merge_as_batch() share a batch id: a batch is a set of flows on disjoint
/// pieces of one graph whose aggregate size is that of a single instance, and
/// counts as one amortized call.
class FlowMeter {
 public:
  struct Entry {
    int n;
    int m;
    int batch;  // -1 for a standalone call
  };

  void record(int n, int m);
  /// Appends `other`, keeping its standalone entries standalone and giving its
  /// batches fresh ids.
  void merge(const FlowMeter& other);
  /// Appends all of `other`'s entries as one new batch.
  void merge_as_batch(const FlowMeter& other);

  long long call_count() const noexcept { return static_cast<long long>(log_.size()); }
  long long amortized_calls() const noexcept { return standalone_ + batches_; }
  long long batch_count() const noexcept { return batches_; }
  long long aggregate_vertices() const noexcept { return agg_n_; }
  long long aggregate_edges() const noexcept { return agg_m_; }
  const std::vector<Entry>& log() const noexcept { return log_; }

  bool operator==(const FlowMeter& o) const {
    return standalone_ == o.standalone_ && batches_ == o.batches_ && agg_n_ == o.agg_n_ &&
           agg_m_ == o.agg_m_ && log_.size() == o.log_.size() &&
           std::equal(log_.begin(), log_.end(), o.log_.begin(), [](const Entry& a, const Entry& b) {
             return a.n == b.n && a.m == b.m && a.batch == b.batch;
           });
  }

 private:
  std::vector<Entry> log_;
  long long standalone_ = 0;
  long long batches_ = 0;
  long long agg_n_ = 0;
  long long agg_m_ = 0;
};

/// One metered call of `engine`. Throws InvalidInput when s == t or out of range.
FlowResult max_flow(const MaxFlowEngine& engine, const WeightedGraph& g, VertexId s, VertexId t,
                    FlowMeter& meter);

/// Minimum cut with A on the source side and B on the sink side, found with a
/// single flow on the graph where A and B are each contracted to one vertex.
/// The returned side is the minimal minimizer.
Cut min_cut_separating(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& a,
                       const VertexSet& b, FlowMeter& meter);

/// Flow instance for min_cut_separating (exposed for instance-size checks).
ContractionMap separation_instance(const WeightedGraph& g, const VertexSet& a, const VertexSet& b);

}  // namespace isocut
