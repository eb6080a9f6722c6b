#include "isocut/steiner.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <unordered_map>

#include "isocut/errors.hpp"
#include "isocut/isolating.hpp"
#include "isocut/oracles.hpp"
#include "isocut/splitters.hpp"

namespace isocut {

int derived_k(Ratio phi) {
  if (phi.is_infinite() || phi.num() <= 0) throw InvalidInput("phi must be positive");
  // (1 + q/p)^3 = (p + q)^3 / p^3
  const __int128 p = phi.num(), q = phi.den();
  const __int128 num = (p + q) * (p + q) * (p + q), den = p * p * p;
  const __int128 k = (num + den - 1) / den;
  if (k > (1 << 30)) throw InvalidInput("derived k overflows");
  return static_cast<int>(k);
}

void AlgoConfig::validate() const {
  if (phi.is_infinite() || phi.num() <= 0 || phi > Ratio(1, 1))
    throw InvalidInput("phi must satisfy 0 < phi <= 1");
  if (k && *k < 1) throw InvalidInput("k must be at least 1");
  if (rand_reps && *rand_reps < 1) throw InvalidInput("rand_reps must be at least 1");
  if (budget_const < 1) throw InvalidInput("budget constant must be positive");
}

int AlgoConfig::effective_k() const { return k ? *k : derived_k(phi); }

int AlgoConfig::effective_rand_reps(int n) const {
  if (rand_reps) return *rand_reps;
  return std::max(1, 4 * ceil_log2(std::max(2, n)));
}

namespace {

void check_terminals(const WeightedGraph& g, const VertexSet& t) {
  if (t.universe() != g.n()) throw InvalidInput("terminal set universe does not match graph");
  if (t.size() < 2) throw InvalidInput("Steiner cut needs |T| >= 2");
}

bool separates(const VertexSet& terminals, const VertexSet& side) {
  return side.intersects(terminals) && !terminals.is_subset_of(side);
}

// Keeps the first cut of minimum weight.
void fold(std::optional<Cut>& best, const Cut& c) {
  if (!best || c.weight < best->weight) best = c;
}

std::shared_ptr<const SetFamily> cached_family(int n, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const SetFamily>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  auto fam = std::make_shared<const SetFamily>(isolator_family_min2(n, k));
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair{n, k}, std::move(fam)).first->second;
}

// Component of the lowest terminal when the terminals are not connected.
std::optional<Cut> disconnected_cut(const WeightedGraph& g, const VertexSet& terminals) {
  std::vector<int> label;
  std::vector<char> none(static_cast<std::size_t>(g.m()), 0);
  component_labels(g, none, label);
  const int c0 = label[terminals.first()];
  bool split = false;
  terminals.for_each([&](VertexId v) { split = split || label[v] != c0; });
  if (!split) return std::nullopt;
  VertexSet side(g.n());
  for (VertexId v = 0; v < g.n(); ++v)
    if (label[v] == c0) side.insert(v);
  return Cut{std::move(side), 0};
}

Weight min_terminal_degree(const WeightedGraph& g, const VertexSet& terminals) {
  Weight d = -1;
  terminals.for_each([&](VertexId v) {
    if (d < 0 || g.degree(v) < d) d = g.degree(v);
  });
  return d;
}

std::vector<Weight> guess_ladder(Weight upper) {
  std::vector<Weight> out;
  for (Weight x = 1; x <= 2 * upper - 1; x *= 2) out.push_back(x);
  return out;
}

CutReport finish(std::optional<Cut> best, FlowMeter meter, Trace trace) {
  ISOCUT_ENSURE(best.has_value(), "no Steiner cut produced");
  CutReport r;
  r.lambda = best->weight;
  r.best_cut = std::move(*best);
  r.meter = std::move(meter);
  r.trace = std::move(trace);
  return r;
}

std::optional<Cut> all_pairs(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& u,
                             FlowMeter& meter, Execution exec, int& pairs) {
  const auto members = u.members();
  std::vector<std::pair<VertexId, VertexId>> todo;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) todo.push_back({members[i], members[j]});
  pairs = static_cast<int>(todo.size());
  std::vector<Cut> cuts(todo.size());
  std::vector<FlowMeter> meters(todo.size());
  for_each_index(exec, static_cast<int>(todo.size()), [&](int i) {
    FlowResult fr = max_flow(engine, g, todo[i].first, todo[i].second, meters[i]);
    cuts[i] = Cut{std::move(fr.min_side), fr.value};
  });
  std::optional<Cut> best;
  for (std::size_t i = 0; i < todo.size(); ++i) {
    meter.merge(meters[i]);
    fold(best, cuts[i]);
  }
  return best;
}

std::optional<Cut> fixed_source(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& u,
                                FlowMeter& meter, Execution exec) {
  const auto members = u.members();
  const int count = static_cast<int>(members.size()) - 1;
  std::vector<Cut> cuts(static_cast<std::size_t>(std::max(0, count)));
  std::vector<FlowMeter> meters(cuts.size());
  for_each_index(exec, count, [&](int i) {
    FlowResult fr = max_flow(engine, g, members[0], members[i + 1], meters[i]);
    cuts[i] = Cut{std::move(fr.min_side), fr.value};
  });
  std::optional<Cut> best;
  for (int i = 0; i < count; ++i) {
    meter.merge(meters[i]);
    fold(best, cuts[i]);
  }
  return best;
}

}  // namespace

LambdaEstimate approx_mincut_estimate(const WeightedGraph& g, const VertexSet& terminals, LambdaMode mode) {
  check_terminals(g, terminals);
  LambdaEstimate est;
  if (disconnected_cut(g, terminals)) {
    est.value = 0;
    return est;
  }
  est.upper = min_terminal_degree(g, terminals);
  est.candidates = guess_ladder(est.upper);
  if (mode == LambdaMode::oracle && terminals.size() == g.n()) est.value = oracles::stoer_wagner(g).weight;
  return est;
}

CutReport steiner_mincut_rand(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& terminals,
                              const AlgoConfig& cfg) {
  cfg.validate();
  check_terminals(g, terminals);
  Trace trace;
  trace.method = "rand";
  FlowMeter meter;
  if (auto cut = disconnected_cut(g, terminals)) {
    trace.disconnected = true;
    return finish(std::move(cut), std::move(meter), std::move(trace));
  }

  std::mt19937_64 rng(cfg.seed);
  const auto members = terminals.members();
  const int scales = ceil_log2(static_cast<long long>(members.size()) + 1) - 1;  // floor(lg |T|)
  const int reps = cfg.effective_rand_reps(g.n());
  std::vector<VertexSet> samples;
  samples.push_back(terminals);
  for (int i = 1; i <= scales; ++i)
    for (int rep = 0; rep < reps; ++rep) {
      VertexSet r(g.n());
      // Keep each terminal with probability 2^-i: the top i bits are all zero.
      for (VertexId v : members)
        if ((rng() >> (64 - i)) == 0) r.insert(v);
      if (r.size() < 2)
        ++trace.rand_skipped;
      else
        samples.push_back(std::move(r));
    }
  trace.rand_samples = static_cast<int>(samples.size());

  std::vector<std::optional<Cut>> found(samples.size());
  std::vector<FlowMeter> meters(samples.size());
  for_each_index(cfg.exec, static_cast<int>(samples.size()), [&](int i) {
    auto res = minimum_isolating_cuts(engine, g, samples[i], meters[i]);
    for (auto& c : res.cuts)
      if (separates(terminals, c.cut.side)) fold(found[i], c.cut);
  });
  std::optional<Cut> best;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    meter.merge(meters[i]);
    if (found[i]) fold(best, *found[i]);
  }
  FlowResult fr = max_flow(engine, g, members[0], members[1], meter);
  fold(best, Cut{std::move(fr.min_side), fr.value});
  return finish(std::move(best), std::move(meter), std::move(trace));
}

long long unbalanced_cost(int u, int k) {
  if (u < 2) return 0;
  auto fam = cached_family(u, std::min(k, u - 1));
  long long cost = 0;
  for (const auto& s : fam->sets) cost += ceil_log2(s.size()) + 1;
  return cost;
}

std::optional<Cut> unbalanced_case(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& u,
                                   int k, FlowMeter& meter, Execution exec) {
  if (u.universe() != g.n()) throw InvalidInput("vertex set universe does not match graph");
  if (u.size() < 2) throw InvalidInput("unbalanced case needs |U| >= 2");
  if (k < 1) throw InvalidInput("k must be at least 1");
  const auto members = u.members();
  auto fam = cached_family(u.size(), std::min(k, u.size() - 1));
  const int count = static_cast<int>(fam->sets.size());
  std::vector<std::optional<Cut>> found(static_cast<std::size_t>(count));
  std::vector<FlowMeter> meters(static_cast<std::size_t>(count));
  for_each_index(exec, count, [&](int i) {
    VertexSet r(g.n());
    fam->sets[i].for_each([&](VertexId x) { r.insert(members[x]); });
    auto res = minimum_isolating_cuts(engine, g, r, meters[i]);
    for (auto& c : res.cuts) fold(found[i], c.cut);
  });
  std::optional<Cut> best;
  for (int i = 0; i < count; ++i) {
    meter.merge(meters[i]);
    if (found[i]) fold(best, *found[i]);
  }
  return best;
}

Sparsification sparsify_terminals(const WeightedGraph& g, const VertexSet& u, Ratio phi, Weight lambda_tilde,
                                  long long budget_const) {
  if (u.universe() != g.n()) throw InvalidInput("vertex set universe does not match graph");
  if (lambda_tilde < 1) throw InvalidInput("lambda estimate must be at least 1");
  ExpanderOptions opts;
  opts.budget_const = budget_const;
  Sparsification out;
  out.decomposition = expander_decompose(g, DemandVector::uniform_on(u, lambda_tilde), phi, opts);
  out.next = VertexSet(g.n());
  const __int128 p = phi.num(), q = phi.den();
  const int take_large = static_cast<int>(1 + (q + p - 1) / p);  // ceil(1 + 1/phi)
  for (const auto& cluster : out.decomposition.clusters) {
    const VertexSet ui = cluster & u;
    if (ui.empty()) {
      out.kinds.push_back(Sparsification::ClusterKind::trivial);
      continue;
    }
    // small iff |U_i| <= 1/phi^2, i.e. |U_i| p^2 <= q^2
    const bool small = static_cast<__int128>(ui.size()) * p * p <= q * q;
    out.kinds.push_back(small ? Sparsification::ClusterKind::small : Sparsification::ClusterKind::large);
    int take = small ? 1 : take_large;
    ui.for_each([&](VertexId v) {
      if (take > 0) {
        out.next.insert(v);
        --take;
      }
    });
  }
  return out;
}

long long call_budget(const WeightedGraph& g, const VertexSet& terminals, const AlgoConfig& cfg) {
  cfg.validate();
  check_terminals(g, terminals);
  const int k = cfg.effective_k();
  long long guesses = 1;
  if (!(cfg.lambda_mode == LambdaMode::oracle && terminals.size() == g.n()))
    guesses = std::max<long long>(1, static_cast<long long>(guess_ladder(min_terminal_degree(g, terminals)).size()));
  long long per_guess = 0;
  long long envelope = 0;
  int covered = k - 1;  // envelope holds the max cost over sizes (k-1, covered]
  std::vector<int> sizes;
  for (int u = terminals.size(); u >= k && u >= 2; u /= 2) sizes.push_back(u);
  std::reverse(sizes.begin(), sizes.end());
  std::vector<long long> at(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (int x = covered + 1; x <= sizes[i]; ++x) envelope = std::max(envelope, unbalanced_cost(x, k));
    covered = std::max(covered, sizes[i]);
    at[i] = envelope;
  }
  for (long long c : at) per_guess += c;
  const long long last = std::min<long long>(k - 1, terminals.size());
  per_guess += last * (last - 1) / 2;
  return guesses * per_guess;
}

CutReport steiner_mincut_det(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& terminals,
                             const AlgoConfig& cfg) {
  cfg.validate();
  check_terminals(g, terminals);
  Trace trace;
  trace.method = "det";
  FlowMeter meter;
  if (auto cut = disconnected_cut(g, terminals)) {
    trace.disconnected = true;
    return finish(std::move(cut), std::move(meter), std::move(trace));
  }
  const int k = cfg.effective_k();
  trace.budget = call_budget(g, terminals, cfg);

  std::vector<Weight> ladder;
  const LambdaEstimate est = approx_mincut_estimate(g, terminals, cfg.lambda_mode);
  if (est.value) {
    ladder = {*est.value};
    trace.lambda_exact = true;
  } else {
    ladder = est.candidates;
  }

  // Work that depends only on U is shared between guesses.
  std::unordered_map<VertexSet, std::optional<Cut>, VertexSetHash> unbalanced_memo, final_memo, naive_memo;
  std::optional<Cut> best;

  for (std::size_t gi = 0; gi < ladder.size(); ++gi) {
    const Weight lt = ladder[gi];
    if (!trace.lambda_exact && best && lt >= 2 * best->weight) break;
    GuessTrace gt;
    gt.lambda_tilde = lt;
    VertexSet u = terminals;
    bool finished = false;
    while (u.size() >= k) {
      gt.u_trajectory.push_back(u.size());
      RoundTrace rt;
      rt.lambda_tilde = lt;
      rt.u_size = u.size();
      if (auto it = unbalanced_memo.find(u); it != unbalanced_memo.end()) {
        rt.unbalanced_reused = true;
        if (it->second) fold(best, *it->second);
      } else {
        const long long before = meter.amortized_calls();
        auto c = unbalanced_case(engine, g, u, k, meter, cfg.exec);
        rt.unbalanced_calls = meter.amortized_calls() - before;
        unbalanced_memo.emplace(u, c);
        if (c) fold(best, *c);
      }

      std::optional<Sparsification> sp;
      try {
        sp = sparsify_terminals(g, u, cfg.phi, lt, cfg.budget_const);
      } catch (const DecompositionFailure&) {
        rt.decomposition_failed = true;
      }
      if (sp) {
        rt.next_size = sp->next.size();
        rt.clusters = static_cast<int>(sp->decomposition.clusters.size());
        rt.inter_cluster_weight = sp->decomposition.inter_cluster_weight;
        rt.halved = 2 * sp->next.size() <= u.size();
      }
      if (cfg.observer) {
        SparsifyRound obs;
        obs.guess = static_cast<int>(gi);
        obs.lambda_tilde = lt;
        obs.u = u;
        obs.decomposition = sp ? &sp->decomposition : nullptr;
        obs.next = sp ? sp->next : VertexSet(g.n());
        obs.halved = rt.halved;
        cfg.observer(obs);
      }
      gt.rounds.push_back(rt);
      if (!rt.halved) {
        if (cfg.fallback_enabled) {
          gt.fallback = true;
          trace.fallback_used = true;
          auto it = naive_memo.find(u);
          if (it == naive_memo.end()) it = naive_memo.emplace(u, fixed_source(engine, g, u, meter, cfg.exec)).first;
          if (it->second) fold(best, *it->second);
        } else {
          gt.aborted = true;
        }
        finished = true;
        break;
      }
      u = std::move(sp->next);
    }
    if (!finished) {
      gt.u_trajectory.push_back(u.size());
      if (u.size() >= 2) {
        auto it = final_memo.find(u);
        if (it != final_memo.end()) {
          gt.final_reused = true;
        } else {
          int pairs = 0;
          it = final_memo.emplace(u, all_pairs(engine, g, u, meter, cfg.exec, pairs)).first;
          gt.final_pairs = pairs;
        }
        if (it->second) fold(best, *it->second);
      }
    }
    gt.best_after = best ? best->weight : -1;
    trace.guesses.push_back(std::move(gt));
  }

  if (!best) {
    // Every guess aborted before producing a cut: the fixed pair still gives one.
    const auto members = terminals.members();
    FlowResult fr = max_flow(engine, g, members[0], members[1], meter);
    best = Cut{std::move(fr.min_side), fr.value};
  }
  trace.within_budget = !trace.fallback_used && meter.amortized_calls() <= trace.budget;
  ISOCUT_ENSURE(separates(terminals, best->side), "best cut does not separate the terminals");
  return finish(std::move(best), std::move(meter), std::move(trace));
}

CutReport global_mincut_det(const MaxFlowEngine& engine, const WeightedGraph& g, const AlgoConfig& cfg) {
  if (g.n() < 2) throw InvalidInput("global min cut needs n >= 2");
  return steiner_mincut_det(engine, g, VertexSet::full(g.n()), cfg);
}

}  // namespace isocut
