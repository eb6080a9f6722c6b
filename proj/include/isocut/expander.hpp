#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isocut/graph.hpp"
#include "isocut/rational.hpp"

namespace isocut {

/// Per-vertex nonnegative integer demands with a cached total.
class DemandVector {
 public:
  DemandVector() = default;
  explicit DemandVector(std::vector<Weight> values);
  /// `value` on every member of `on`, 0 elsewhere.
  static DemandVector uniform_on(const VertexSet& on, Weight value);

  Weight operator[](VertexId v) const { return values_[v]; }
  Weight total() const noexcept { return total_; }
  Weight of(const VertexSet& s) const;
  int size() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<Weight>& values() const noexcept { return values_; }

 private:
  std::vector<Weight> values_;
  Weight total_ = 0;
};

/// d_C(v) = d(v) + w(E({v}, V \ C)) for v in C (0 outside C).
DemandVector augmented_demands(const WeightedGraph& g, const DemandVector& d, const VertexSet& cluster);

/// w(∂S) inside G[cluster] over min{d(S), d(cluster \ S)}; +infinity when the
/// minimum is 0. Requires ∅ ⊊ S ⊊ cluster.
Ratio sparsity(const WeightedGraph& g, const VertexSet& cluster, const DemandVector& d, const VertexSet& s);

struct ExpansionCheck {
  bool expander = true;
  bool certified = false;  // exhaustive over all cuts
  Ratio min_sparsity = Ratio::infinity();
  std::optional<VertexSet> witness;  // sparsest cut found
};

inline constexpr int kExhaustiveClusterLimit = 20;

/// Whether G[cluster] is a (phi, d)-expander. Clusters of at most 20 vertices
/// are checked over every cut; larger ones are searched heuristically and the
/// answer is advisory (certified == false).
ExpansionCheck verify_expander(const WeightedGraph& g, const VertexSet& cluster, const DemandVector& d,
                               Ratio phi);

struct ExpanderOptions {
  long long budget_const = 1;        // c_b
  int exhaustive_limit = kExhaustiveClusterLimit;
  int split_cap_factor = 4;          // at most factor * n splits
};

struct ExpanderDecomposition {
  std::vector<VertexSet> clusters;   // ordered by smallest member
  std::vector<char> certified;       // per cluster
  DemandVector augmented;            // d_i(v) for v in V_i
  Weight inter_cluster_weight = 0;
  Ratio phi;
  Weight demand_total = 0;           // d(V)
  long long budget_const = 1;
  int splits = 0;
  int improvement_flows = 0;         // flows spent refining sweep cuts

  /// c_b * phi * d(V) * L^2 with L = max(1, ceil(log2 n)), exact.
  Ratio budget(int n) const;
  bool within_budget(int n) const;
  int cluster_of(VertexId v) const;
};

class DecompositionFailure : public std::runtime_error {
 public:
  explicit DecompositionFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Recursive sparse-cut refinement: a cluster is split along a cut of sparsity
/// below phi w.r.t. its boundary-augmented demands until none is found.
/// Throws DecompositionFailure if the split cap or the inter-cluster budget is
/// exceeded, InvalidInput unless 0 < phi <= 1.
ExpanderDecomposition expander_decompose(const WeightedGraph& g, const DemandVector& d, Ratio phi,
                                         const ExpanderOptions& options = {});

}  // namespace isocut
