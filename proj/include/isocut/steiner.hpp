#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isocut/expander.hpp"
#include "isocut/graph.hpp"
#include "isocut/maxflow.hpp"
#include "isocut/parallel.hpp"
#include "isocut/rational.hpp"

namespace isocut {

/// How the driver obtains the min-cut estimate used as the demand scale.
///   guess:  every power of two up to 2*min terminal degree - 1, stopping once
///           the guess reaches twice the best cut seen;
///   oracle: Stoer-Wagner when T = V (falls back to guess otherwise).
enum class LambdaMode { guess, oracle };

/// One sparsification attempt as seen by AlgoConfig::observer.
struct SparsifyRound {
  int guess = 0;                 // index into the estimate ladder
  Weight lambda_tilde = 0;
  VertexSet u;
  const ExpanderDecomposition* decomposition = nullptr;  // null if it failed
  VertexSet next;                // U' (empty on failure)
  bool halved = false;
};

struct AlgoConfig {
  Ratio phi{1, 16};
  std::optional<int> k;          // default ceil((1 + 1/phi)^3)
  long long budget_const = 1;    // c_b of the expander budget
  std::optional<int> rand_reps;  // default ceil(4 log2 n)
  std::uint64_t seed = 0;
  bool fallback_enabled = true;
  LambdaMode lambda_mode = LambdaMode::guess;
  Execution exec = Execution::serial;
  std::function<void(const SparsifyRound&)> observer;

  /// Throws InvalidInput unless 0 < phi <= 1, k >= 1, rand_reps >= 1.
  void validate() const;
  int effective_k() const;
  int effective_rand_reps(int n) const;
};

/// ceil((1 + 1/phi)^3).
int derived_k(Ratio phi);

struct RoundTrace {
  Weight lambda_tilde = 0;
  int u_size = 0;
  int next_size = 0;           // |U'|, 0 when the decomposition failed
  int clusters = 0;
  Weight inter_cluster_weight = 0;
  long long unbalanced_calls = 0;  // amortized calls spent here (0 if reused)
  bool unbalanced_reused = false;
  bool decomposition_failed = false;
  bool halved = false;
};

struct GuessTrace {
  Weight lambda_tilde = 0;
  std::vector<RoundTrace> rounds;
  std::vector<int> u_trajectory;  // |U| at the start of each round and at the end
  bool fallback = false;          // finished through the naive routine
  bool aborted = false;           // round failed with fallback disabled
  int final_pairs = 0;            // pairs evaluated in the last phase
  bool final_reused = false;
  Weight best_after = 0;
};

struct Trace {
  std::string method;
  std::vector<GuessTrace> guesses;
  bool lambda_exact = false;      // oracle mode supplied lambda itself
  bool fallback_used = false;
  bool disconnected = false;      // terminals in different components
  long long budget = 0;           // det only
  bool within_budget = true;      // det only: calls <= budget and no fallback
  int rand_samples = 0;           // rand only: isolating-cut runs
  int rand_skipped = 0;           // rand only: samples with |R| < 2
};

struct CutReport {
  Cut best_cut;
  Weight lambda = 0;
  FlowMeter meter;
  Trace trace;
};

struct LambdaEstimate {
  /// Exact when lambda came from the oracle or the terminals are disconnected.
  std::optional<Weight> value;
  /// Guess ladder; one entry lies in [lambda, 2 lambda) when connected.
  std::vector<Weight> candidates;
  Weight upper = 0;  // min terminal degree, an upper bound on lambda
};

LambdaEstimate approx_mincut_estimate(const WeightedGraph& g, const VertexSet& terminals, LambdaMode mode);

/// Isolating cuts over random terminal samples at every scale plus one fixed
/// s-t cut between the two lowest terminals.
CutReport steiner_mincut_rand(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& terminals,
                              const AlgoConfig& cfg);

/// Best isolating cut over the padded isolator family for min(k, |U|-1) laid
/// onto U in ascending id order. Every returned side separates T.
std::optional<Cut> unbalanced_case(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& u,
                                   int k, FlowMeter& meter, Execution exec = Execution::serial);

struct Sparsification {
  VertexSet next;
  ExpanderDecomposition decomposition;
  enum class ClusterKind { trivial, small, large };
  std::vector<ClusterKind> kinds;  // per cluster
};

/// Expander decomposition with demand lambda_tilde on U, then lowest-id
/// representatives: one per small cluster (1 <= |U_i| <= 1/phi^2), and
/// ceil(1 + 1/phi) per large cluster. Propagates DecompositionFailure.
Sparsification sparsify_terminals(const WeightedGraph& g, const VertexSet& u, Ratio phi, Weight lambda_tilde,
                                  long long budget_const = 1);

/// Amortized isolating-cut flows of unbalanced_case on a set of size u.
long long unbalanced_cost(int u, int k);

/// A-priori bound on the amortized calls of steiner_mincut_det:
///   guesses * (sum over rounds r of c(floor(|T| / 2^r)) + C(k-1, 2))
/// with rounds while the size is >= k and c(x) the largest unbalanced_cost
/// over sizes in [k, x]. Fallback flows are not covered.
long long call_budget(const WeightedGraph& g, const VertexSet& terminals, const AlgoConfig& cfg);

CutReport steiner_mincut_det(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& terminals,
                             const AlgoConfig& cfg);

/// steiner_mincut_det with T = V. Throws InvalidInput if n < 2.
CutReport global_mincut_det(const MaxFlowEngine& engine, const WeightedGraph& g, const AlgoConfig& cfg);

}  // namespace isocut
