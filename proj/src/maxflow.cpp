#include "isocut/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "isocut/errors.hpp"

namespace isocut {
namespace {

// Residual state over the bidirected arcs of an undirected graph: edge i is
// arc 2i (u->v) and arc 2i+1 (v->u), each starting at capacity w.
class Residual {
 public:
  explicit Residual(const WeightedGraph& g) : g_(g), cap_(static_cast<std::size_t>(g.m()) * 2) {
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) cap_[2 * i] = cap_[2 * i + 1] = edges[i].w;
  }

  int arc(VertexId from, const Neighbor& nb) const {
    return 2 * nb.edge + (g_.edges()[nb.edge].u == from ? 0 : 1);
  }
  Weight cap(int a) const { return cap_[a]; }
  void push(int a, Weight f) {
    cap_[a] -= f;
    cap_[a ^ 1] += f;
  }

  VertexSet reachable(VertexId s) const {
    VertexSet seen(g_.n());
    std::vector<VertexId> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const auto& nb : g_.neighbors(x))
        if (cap_[arc(x, nb)] > 0 && !seen.contains(nb.to)) {
          seen.insert(nb.to);
          stack.push_back(nb.to);
        }
    }
    return seen;
  }

 private:
  const WeightedGraph& g_;
  std::vector<Weight> cap_;
};

void check_terminals(const WeightedGraph& g, VertexId s, VertexId t) {
  if (s < 0 || t < 0 || s >= g.n() || t >= g.n()) throw InvalidInput("flow terminal out of range");
  if (s == t) throw InvalidInput("flow source equals sink");
}

class DinicRun {
 public:
  DinicRun(const WeightedGraph& g, VertexId s, VertexId t)
      : g_(g), res_(g), s_(s), t_(t), level_(static_cast<std::size_t>(g.n())),
        it_(static_cast<std::size_t>(g.n())) {}

  FlowResult run() {
    Weight flow = 0;
    while (bfs()) {
      for (VertexId v = 0; v < g_.n(); ++v) it_[v] = 0;
      while (Weight f = dfs(s_, std::numeric_limits<Weight>::max())) flow += f;
    }
    return {flow, res_.reachable(s_)};
  }

 private:
  bool bfs() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<VertexId> q;
    level_[s_] = 0;
    q.push(s_);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (const auto& nb : g_.neighbors(x))
        if (level_[nb.to] < 0 && res_.cap(res_.arc(x, nb)) > 0) {
          level_[nb.to] = level_[x] + 1;
          q.push(nb.to);
        }
    }
    return level_[t_] >= 0;
  }

  Weight dfs(VertexId x, Weight limit) {
    if (x == t_) return limit;
    auto nbs = g_.neighbors(x);
    for (int& i = it_[x]; i < static_cast<int>(nbs.size()); ++i) {
      const auto& nb = nbs[i];
      int a = res_.arc(x, nb);
      if (res_.cap(a) <= 0 || level_[nb.to] != level_[x] + 1) continue;
      Weight pushed = dfs(nb.to, std::min(limit, res_.cap(a)));
      if (pushed > 0) {
        res_.push(a, pushed);
        return pushed;
      }
    }
    return 0;
  }

  const WeightedGraph& g_;
  Residual res_;
  VertexId s_, t_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace

FlowResult DinicEngine::solve(const WeightedGraph& g, VertexId s, VertexId t) const {
  check_terminals(g, s, t);
  return DinicRun(g, s, t).run();
}

FlowResult EdmondsKarpEngine::solve(const WeightedGraph& g, VertexId s, VertexId t) const {
  check_terminals(g, s, t);
  Residual res(g);
  Weight flow = 0;
  std::vector<int> parent_arc(static_cast<std::size_t>(g.n()));
  std::vector<VertexId> parent(static_cast<std::size_t>(g.n()));
  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), -2);
    parent_arc[s] = -1;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty() && parent_arc[t] == -2) {
      VertexId x = q.front();
      q.pop();
      for (const auto& nb : g.neighbors(x)) {
        int a = res.arc(x, nb);
        if (parent_arc[nb.to] == -2 && res.cap(a) > 0) {
          parent_arc[nb.to] = a;
          parent[nb.to] = x;
          q.push(nb.to);
        }
      }
    }
    if (parent_arc[t] == -2) break;
    Weight f = std::numeric_limits<Weight>::max();
    for (VertexId v = t; v != s; v = parent[v]) f = std::min(f, res.cap(parent_arc[v]));
    for (VertexId v = t; v != s; v = parent[v]) res.push(parent_arc[v], f);
    flow += f;
  }
  return {flow, res.reachable(s)};
}

std::unique_ptr<MaxFlowEngine> make_engine(const std::string& name) {
  if (name == "dinic") return std::make_unique<DinicEngine>();
  if (name == "edmonds-karp") return std::make_unique<EdmondsKarpEngine>();
  throw InvalidInput("unknown max-flow engine '" + name + "'");
}

void FlowMeter::record(int n, int m) {
  log_.push_back({n, m, -1});
  ++standalone_;
  agg_n_ += n;
  agg_m_ += m;
}

void FlowMeter::merge(const FlowMeter& other) {
  const int offset = static_cast<int>(batches_);
  for (const auto& e : other.log_) log_.push_back({e.n, e.m, e.batch < 0 ? -1 : e.batch + offset});
  standalone_ += other.standalone_;
  batches_ += other.batches_;
  agg_n_ += other.agg_n_;
  agg_m_ += other.agg_m_;
}

void FlowMeter::merge_as_batch(const FlowMeter& other) {
  if (other.log_.empty()) return;
  const int id = static_cast<int>(batches_);
  for (const auto& e : other.log_) log_.push_back({e.n, e.m, id});
  ++batches_;
  agg_n_ += other.agg_n_;
  agg_m_ += other.agg_m_;
}

FlowResult max_flow(const MaxFlowEngine& engine, const WeightedGraph& g, VertexId s, VertexId t,
                    FlowMeter& meter) {
  check_terminals(g, s, t);
  meter.record(g.n(), g.m());
  FlowResult r = engine.solve(g, s, t);
  ISOCUT_ENSURE(r.min_side.contains(s) && !r.min_side.contains(t), "engine returned an invalid side");
  return r;
}

ContractionMap separation_instance(const WeightedGraph& g, const VertexSet& a, const VertexSet& b) {
  if (a.universe() != g.n() || b.universe() != g.n()) throw InvalidInput("terminal set universe mismatch");
  if (a.empty() || b.empty()) throw InvalidInput("separated sets must be nonempty");
  if (a.intersects(b)) throw InvalidInput("separated sets must be disjoint");
  std::vector<VertexId> label(static_cast<std::size_t>(g.n()));
  int next = 2;
  for (VertexId v = 0; v < g.n(); ++v) label[v] = a.contains(v) ? 0 : b.contains(v) ? 1 : next++;
  return contract_labels(g, std::move(label), next);
}

Cut min_cut_separating(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& a,
                       const VertexSet& b, FlowMeter& meter) {
  ContractionMap inst = separation_instance(g, a, b);
  FlowResult r = max_flow(engine, inst.graph, 0, 1, meter);
  return {inst.lift(r.min_side), r.value};
}

}  // namespace isocut
