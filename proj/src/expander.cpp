#include "isocut/expander.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>

#include "isocut/isolating.hpp"
#include "isocut/maxflow.hpp"

namespace isocut {

DemandVector::DemandVector(std::vector<Weight> values) : values_(std::move(values)) {
  for (Weight x : values_) {
    if (x < 0) throw InvalidInput("demands must be nonnegative");
    if (__builtin_add_overflow(total_, x, &total_) || total_ >= kMaxTotalWeight)
      throw InvalidInput("demand total reaches 2^62");
  }
}

DemandVector DemandVector::uniform_on(const VertexSet& on, Weight value) {
  std::vector<Weight> v(static_cast<std::size_t>(on.universe()), 0);
  on.for_each([&](VertexId x) { v[x] = value; });
  return DemandVector(std::move(v));
}

Weight DemandVector::of(const VertexSet& s) const {
  Weight t = 0;
  s.for_each([&](VertexId v) { t += values_[v]; });
  return t;
}

DemandVector augmented_demands(const WeightedGraph& g, const DemandVector& d, const VertexSet& cluster) {
  std::vector<Weight> out(static_cast<std::size_t>(g.n()), 0);
  cluster.for_each([&](VertexId v) {
    Weight x = d[v];
    for (const auto& nb : g.neighbors(v))
      if (!cluster.contains(nb.to)) x += nb.w;
    out[v] = x;
  });
  return DemandVector(std::move(out));
}

Ratio sparsity(const WeightedGraph& g, const VertexSet& cluster, const DemandVector& d, const VertexSet& s) {
  if (!s.is_subset_of(cluster) || s.empty() || s.size() == cluster.size())
    throw InvalidInput("sparsity needs a proper nonempty subset of the cluster");
  Weight cut = 0;
  s.for_each([&](VertexId v) {
    for (const auto& nb : g.neighbors(v))
      if (cluster.contains(nb.to) && !s.contains(nb.to)) cut += nb.w;
  });
  const Weight ds = d.of(s), dc = d.of(cluster);
  const Weight lo = std::min(ds, dc - ds);
  if (lo == 0) return Ratio::infinity();
  return Ratio(cut, lo);
}

namespace {

// G[cluster] in local ids with per-vertex demands.
struct LocalCluster {
  std::vector<VertexId> global;
  std::vector<std::vector<std::pair<int, Weight>>> adj;
  std::vector<Weight> inner_degree;
  std::vector<Weight> demand;
  Weight demand_total = 0;

  LocalCluster(const WeightedGraph& g, const VertexSet& cluster, const DemandVector& d)
      : global(cluster.members()) {
    const int c = static_cast<int>(global.size());
    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < c; ++i) local[global[i]] = i;
    adj.resize(static_cast<std::size_t>(c));
    inner_degree.assign(static_cast<std::size_t>(c), 0);
    demand.resize(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) {
      demand[i] = d[global[i]];
      demand_total += demand[i];
      for (const auto& nb : g.neighbors(global[i]))
        if (int j = local[nb.to]; j >= 0) {
          adj[i].push_back({j, nb.w});
          inner_degree[i] += nb.w;
        }
    }
  }
  int size() const { return static_cast<int>(global.size()); }

  VertexSet to_global(const std::vector<char>& in, int n) const {
    VertexSet s(n);
    for (int i = 0; i < size(); ++i)
      if (in[i]) s.insert(global[i]);
    return s;
  }
};

struct Candidate {
  Weight cut = 0;
  Weight lo = 0;  // min demand side; 0 means infinite sparsity
  std::vector<char> in;

  bool valid() const { return lo > 0; }
  bool better_than(const Candidate& o) const {
    if (!valid()) return false;
    if (!o.valid()) return true;
    return static_cast<__int128>(cut) * o.lo < static_cast<__int128>(o.cut) * lo;
  }
  Ratio ratio() const { return valid() ? Ratio(cut, lo) : Ratio::infinity(); }
};

Candidate exhaustive_sparsest(const LocalCluster& lc) {
  const int c = lc.size();
  Candidate best;
  if (c < 2) return best;
  std::vector<Weight> w(static_cast<std::size_t>(c) * c, 0);
  for (int i = 0; i < c; ++i)
    for (auto [j, x] : lc.adj[i]) w[i * c + j] = x;
  std::vector<Weight> to_side(static_cast<std::size_t>(c), 0);  // weight from i into S
  std::uint32_t mask = 0, best_mask = 0;
  Weight cut = 0, ds = 0;
  const std::uint32_t limit = std::uint32_t{1} << (c - 1);  // vertex c-1 stays outside S
  for (std::uint32_t step = 1; step < limit; ++step) {
    const int i = std::countr_zero(step);
    const bool adding = !((mask >> i) & 1u);
    if (adding) {
      cut += lc.inner_degree[i] - 2 * to_side[i];
      ds += lc.demand[i];
      mask |= 1u << i;
      for (int j = 0; j < c; ++j) to_side[j] += w[j * c + i];
    } else {
      cut -= lc.inner_degree[i] - 2 * to_side[i];
      ds -= lc.demand[i];
      mask &= ~(1u << i);
      for (int j = 0; j < c; ++j) to_side[j] -= w[j * c + i];
    }
    const Weight lo = std::min(ds, lc.demand_total - ds);
    if (lo == 0) continue;
    if (!best.valid() || static_cast<__int128>(cut) * best.lo < static_cast<__int128>(best.cut) * lo) {
      best.cut = cut;
      best.lo = lo;
      best_mask = mask;
    }
  }
  if (best.valid()) {
    best.in.assign(static_cast<std::size_t>(c), 0);
    for (int i = 0; i < c; ++i) best.in[i] = (best_mask >> i) & 1u;
  }
  return best;
}

Candidate evaluate(const LocalCluster& lc, const std::vector<char>& in) {
  Candidate cand;
  cand.in = in;
  Weight ds = 0;
  int count = 0;
  for (int i = 0; i < lc.size(); ++i) {
    if (!in[i]) continue;
    ++count;
    ds += lc.demand[i];
    for (auto [j, x] : lc.adj[i])
      if (!in[j]) cand.cut += x;
  }
  cand.lo = (count == 0 || count == lc.size()) ? 0 : std::min(ds, lc.demand_total - ds);
  return cand;
}

// Prefix cuts of `order`.
void sweep(const LocalCluster& lc, const std::vector<int>& order, Candidate& best) {
  const int c = lc.size();
  std::vector<char> in(static_cast<std::size_t>(c), 0);
  Weight cut = 0, ds = 0;
  int best_prefix = -1;
  Candidate local_best;
  for (int p = 0; p + 1 < c; ++p) {
    const int v = order[p];
    Weight into = 0;
    for (auto [j, x] : lc.adj[v])
      if (in[j]) into += x;
    cut += lc.inner_degree[v] - 2 * into;
    ds += lc.demand[v];
    in[v] = 1;
    Candidate probe;
    probe.cut = cut;
    probe.lo = std::min(ds, lc.demand_total - ds);
    if (probe.better_than(local_best)) {
      local_best.cut = probe.cut;
      local_best.lo = probe.lo;
      best_prefix = p;
    }
  }
  if (best_prefix < 0) return;
  local_best.in.assign(static_cast<std::size_t>(c), 0);
  for (int p = 0; p <= best_prefix; ++p) local_best.in[order[p]] = 1;
  if (local_best.better_than(best)) best = std::move(local_best);
}

void spectral_sweeps(const LocalCluster& lc, Candidate& best) {
  const int c = lc.size();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(c, c);
  for (int i = 0; i < c; ++i)
    for (auto [j, x] : lc.adj[i]) {
      lap(i, j) -= static_cast<double>(x);
      lap(i, i) += static_cast<double>(x);
    }
  double mean_demand = lc.demand_total > 0 ? static_cast<double>(lc.demand_total) / c : 1.0;
  Eigen::VectorXd mass(c);
  for (int i = 0; i < c; ++i) mass(i) = static_cast<double>(lc.demand[i]) + 1e-3 * mean_demand;
  // Symmetric form M^{-1/2} L M^{-1/2}.
  Eigen::VectorXd inv_sqrt = mass.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd normalized = inv_sqrt.asDiagonal() * lap * inv_sqrt.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normalized);
  if (solver.info() != Eigen::Success) return;
  const int vectors = std::min(c - 1, 4);
  for (int k = 1; k <= vectors; ++k) {
    Eigen::VectorXd x = inv_sqrt.asDiagonal() * solver.eigenvectors().col(k);
    std::vector<int> order(static_cast<std::size_t>(c));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x(a) < x(b); });
    sweep(lc, order, best);
    std::reverse(order.begin(), order.end());
    sweep(lc, order, best);
  }
}

void greedy_moves(const LocalCluster& lc, Candidate& best) {
  if (!best.valid()) return;
  const int c = lc.size();
  for (int round = 0; round < 2 * c; ++round) {
    Candidate improved = best;
    bool found = false;
    for (int v = 0; v < c; ++v) {
      auto in = best.in;
      in[v] = !in[v];
      Candidate probe = evaluate(lc, in);
      if (probe.better_than(improved)) {
        improved = std::move(probe);
        found = true;
      }
    }
    if (!found) return;
    best = std::move(improved);
  }
}

// Flow-based refinement of the smaller-demand side S: finds X ⊆ S with
// w(∂X)/d(X) below that of S when one exists.
void flow_improve(const LocalCluster& lc, Candidate& best, int& flows) {
  const DinicEngine engine;
  for (int iter = 0; iter < 16 && best.valid(); ++iter) {
    const int c = lc.size();
    Weight ds = 0;
    for (int i = 0; i < c; ++i)
      if (best.in[i]) ds += lc.demand[i];
    std::vector<char> small = best.in;
    if (ds * 2 > lc.demand_total) {
      for (auto& b : small) b = !b;
      ds = lc.demand_total - ds;
    }
    if (ds != best.lo) return;
    const Weight a = best.cut, b = best.lo;
    // Vertices: 0 = source, 1 = sink (outside S), then members of S.
    std::vector<int> id(static_cast<std::size_t>(c), 1);
    std::vector<int> members;
    for (int i = 0; i < c; ++i)
      if (small[i]) {
        id[i] = 2 + static_cast<int>(members.size());
        members.push_back(i);
      }
    std::vector<EdgeTriple> edges;
    auto mul = [](Weight x, Weight y, Weight& out) {
      return !__builtin_mul_overflow(x, y, &out) && out <= kMaxEdgeWeight;
    };
    bool ok = true;
    for (int i : members) {
      Weight cap = 0;
      if (lc.demand[i] > 0) {
        ok = ok && mul(a, lc.demand[i], cap);
        if (cap > 0) edges.push_back({0, id[i], cap});
      }
      for (auto [j, x] : lc.adj[i]) {
        if (id[j] >= 2 && j < i) continue;
        ok = ok && mul(b, x, cap);
        edges.push_back({id[i], id[j], cap});
      }
    }
    if (!ok) return;
    WeightedGraph inst;
    try {
      inst = build_graph(2 + static_cast<int>(members.size()), edges);
    } catch (const InvalidInput&) {
      return;
    }
    ++flows;
    FlowResult fr = engine.solve(inst, 0, 1);
    Weight base = 0;
    if (!mul(a, b, base)) return;
    if (fr.value >= base) return;
    std::vector<char> in(static_cast<std::size_t>(c), 0);
    for (std::size_t k = 0; k < members.size(); ++k)
      if (fr.min_side.contains(static_cast<VertexId>(2 + k))) in[members[k]] = 1;
    Candidate next = evaluate(lc, in);
    if (!next.better_than(best)) return;
    best = std::move(next);
  }
}

Candidate heuristic_sparsest(const LocalCluster& lc, const WeightedGraph& g, int& flows) {
  const int c = lc.size();
  Candidate best;
  if (c < 2) return best;
  // Disconnected pieces.
  {
    std::vector<int> comp(static_cast<std::size_t>(c), -1);
    int count = 0;
    for (int s = 0; s < c; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> stack{s};
      comp[s] = count;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto [j, w] : lc.adj[x])
          if (comp[j] < 0) {
            comp[j] = count;
            stack.push_back(j);
          }
      }
      ++count;
    }
    if (count > 1)
      for (int k = 0; k < count; ++k) {
        std::vector<char> in(static_cast<std::size_t>(c));
        for (int i = 0; i < c; ++i) in[i] = comp[i] == k;
        Candidate cand = evaluate(lc, in);
        if (cand.better_than(best)) best = std::move(cand);
      }
  }
  for (int v = 0; v < c; ++v) {
    std::vector<char> in(static_cast<std::size_t>(c), 0);
    in[v] = 1;
    Candidate cand = evaluate(lc, in);
    if (cand.better_than(best)) best = std::move(cand);
  }
  spectral_sweeps(lc, best);
  greedy_moves(lc, best);
  flow_improve(lc, best, flows);
  greedy_moves(lc, best);
  (void)g;
  return best;
}

struct SearchResult {
  Candidate best;
  bool exhaustive = false;
};

SearchResult search_sparsest(const WeightedGraph& g, const VertexSet& cluster, const DemandVector& d,
                             int exhaustive_limit, int& flows) {
  LocalCluster lc(g, cluster, d);
  if (lc.size() <= exhaustive_limit) return {exhaustive_sparsest(lc), true};
  return {heuristic_sparsest(lc, g, flows), false};
}

void check_phi(Ratio phi) {
  if (phi.is_infinite() || phi.num() <= 0 || phi > Ratio(1, 1))
    throw InvalidInput("phi must satisfy 0 < phi <= 1");
}

}  // namespace

ExpansionCheck verify_expander(const WeightedGraph& g, const VertexSet& cluster, const DemandVector& d,
                               Ratio phi) {
  check_phi(phi);
  int flows = 0;
  ExpansionCheck out;
  LocalCluster lc(g, cluster, d);
  SearchResult sr = lc.size() <= kExhaustiveClusterLimit
                        ? SearchResult{exhaustive_sparsest(lc), true}
                        : SearchResult{heuristic_sparsest(lc, g, flows), false};
  out.certified = sr.exhaustive;
  out.min_sparsity = sr.best.ratio();
  if (sr.best.valid()) out.witness = lc.to_global(sr.best.in, g.n());
  out.expander = !(out.min_sparsity < phi);
  return out;
}

Ratio ExpanderDecomposition::budget(int n) const {
  const __int128 l = std::max(1, ceil_log2(n));
  const __int128 num = static_cast<__int128>(budget_const) * phi.num() * demand_total * l * l;
  if (num > static_cast<__int128>(kMaxTotalWeight)) return Ratio::infinity();
  return Ratio(static_cast<std::int64_t>(num), phi.den());
}

bool ExpanderDecomposition::within_budget(int n) const {
  return !(budget(n) < Ratio(inter_cluster_weight, 1));
}

int ExpanderDecomposition::cluster_of(VertexId v) const {
  for (std::size_t i = 0; i < clusters.size(); ++i)
    if (clusters[i].contains(v)) return static_cast<int>(i);
  return -1;
}

ExpanderDecomposition expander_decompose(const WeightedGraph& g, const DemandVector& d, Ratio phi,
                                         const ExpanderOptions& options) {
  check_phi(phi);
  if (d.size() != g.n()) throw InvalidInput("demand vector size differs from n");
  if (options.budget_const < 1) throw InvalidInput("budget constant must be positive");

  ExpanderDecomposition out;
  out.phi = phi;
  out.demand_total = d.total();
  out.budget_const = options.budget_const;
  const long long cap = static_cast<long long>(options.split_cap_factor) * std::max(1, g.n());

  std::deque<VertexSet> queue;
  if (g.n() > 0) queue.push_back(VertexSet::full(g.n()));
  std::vector<std::pair<VertexSet, bool>> done;
  while (!queue.empty()) {
    VertexSet cluster = std::move(queue.front());
    queue.pop_front();
    DemandVector aug = augmented_demands(g, d, cluster);
    SearchResult sr = search_sparsest(g, cluster, aug, options.exhaustive_limit, out.improvement_flows);
    if (sr.best.valid() && sr.best.ratio() < phi) {
      if (++out.splits > cap)
        throw DecompositionFailure("split cap of " + std::to_string(cap) + " exceeded");
      LocalCluster lc(g, cluster, aug);
      VertexSet side = lc.to_global(sr.best.in, g.n());
      queue.push_back(cluster - side);
      queue.push_back(std::move(side));
    } else {
      done.emplace_back(std::move(cluster), sr.exhaustive);
    }
  }
  std::sort(done.begin(), done.end(),
            [](const auto& a, const auto& b) { return a.first.first() < b.first.first(); });

  std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
  std::vector<Weight> aug(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t i = 0; i < done.size(); ++i) {
    done[i].first.for_each([&](VertexId v) { owner[v] = static_cast<int>(i); });
    out.clusters.push_back(done[i].first);
    out.certified.push_back(done[i].second ? 1 : 0);
  }
  for (VertexId v = 0; v < g.n(); ++v) aug[v] = d[v];
  for (const auto& e : g.edges())
    if (owner[e.u] != owner[e.v]) {
      out.inter_cluster_weight += e.w;
      aug[e.u] += e.w;
      aug[e.v] += e.w;
    }
  out.augmented = DemandVector(std::move(aug));
  if (!out.within_budget(g.n()))
    throw DecompositionFailure("inter-cluster weight " + std::to_string(out.inter_cluster_weight) +
                               " exceeds budget " + out.budget(g.n()).to_string());
  return out;
}

}  // namespace isocut
