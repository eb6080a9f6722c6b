#pragma once

#include <cstdint>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "isocut/vertex_set.hpp"

namespace isocut {

using Weight = std::int64_t;

inline constexpr Weight kMaxEdgeWeight = Weight{1} << 40;
inline constexpr Weight kMaxTotalWeight = Weight{1} << 62;

struct Edge {
  VertexId u;
  VertexId v;
  Weight w;
  bool operator==(const Edge&) const = default;
};

struct EdgeTriple {
  VertexId u;
  VertexId v;
  Weight w;
};

struct Neighbor {
  VertexId to;
  Weight w;
  int edge;  // index into WeightedGraph::edges()
};

/// Undirected graph with exact integer weights. Edges are stored once in
/// canonical form (u < v, ascending), parallel edges merged, self-loops and
/// zero weights dropped. Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(VertexId v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  Weight degree(VertexId v) const noexcept { return degree_[v]; }
  Weight total_weight() const noexcept { return total_; }

  /// Index of edge {u, v} or -1.
  int find_edge(VertexId u, VertexId v) const;

  bool operator==(const WeightedGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  friend WeightedGraph build_graph(int n, std::span<const EdgeTriple> triples);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Neighbor> adj_;
  std::vector<Weight> degree_;
  Weight total_ = 0;
};

/// Throws InvalidInput for out-of-range ids, negative or oversized weights,
/// or total weight reaching 2^62.
WeightedGraph build_graph(int n, std::span<const EdgeTriple> triples);
WeightedGraph build_graph(int n, std::initializer_list<EdgeTriple> triples);

struct Cut {
  VertexSet side;
  Weight weight = 0;
};

/// w(∂S). Requires ∅ ⊊ S ⊊ V.
Weight cut_weight(const WeightedGraph& g, const VertexSet& side);
/// Same sum without the properness check (used on sides that may be trivial).
Weight boundary_weight(const WeightedGraph& g, const VertexSet& side);
/// Mask of edges with exactly one endpoint in side.
std::vector<char> cut_edge_mask(const WeightedGraph& g, const VertexSet& side);

/// Result of contracting each class of a partition to a single vertex.
struct ContractionMap {
  int original_n = 0;
  std::vector<VertexId> label;  // original vertex -> contracted vertex
  WeightedGraph graph;

  VertexSet lift(const VertexSet& contracted_side) const;
};

/// `label[v]` in [0, classes) for every v, every class nonempty.
ContractionMap contract_labels(const WeightedGraph& g, std::vector<VertexId> label, int classes);
/// Classes must partition V; contracted vertex i corresponds to classes[i].
ContractionMap contract(const WeightedGraph& g, std::span<const VertexSet> classes);

/// Connected components of (V, E \ removed), ordered by smallest member.
std::vector<VertexSet> components_after_removal(const WeightedGraph& g,
                                                std::span<const std::pair<VertexId, VertexId>> removed);
std::vector<VertexSet> components_after_removal_mask(const WeightedGraph& g,
                                                     std::span<const char> removed_mask);
/// Component id per vertex (ids ordered by smallest member); returns count.
int component_labels(const WeightedGraph& g, std::span<const char> removed_mask,
                     std::vector<int>& label);

}  // namespace isocut
