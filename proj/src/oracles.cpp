#include "isocut/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "isocut/errors.hpp"

namespace isocut::oracles {

Cut stoer_wagner(const WeightedGraph& g) {
  const int n = g.n();
  if (n < 2) throw InvalidInput("global min cut needs n >= 2");

  // Connectivity first: a plain DFS from vertex 0.
  {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(x))
        if (!seen[nb.to]) {
          seen[nb.to] = 1;
          ++reached;
          stack.push_back(nb.to);
        }
    }
    if (reached < n) {
      VertexSet side(n);
      for (VertexId v = 0; v < n; ++v)
        if (seen[v]) side.insert(v);
      return Cut{std::move(side), 0};
    }
  }

  std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : g.edges()) {
    w[static_cast<std::size_t>(e.u) * n + e.v] = e.w;
    w[static_cast<std::size_t>(e.v) * n + e.u] = e.w;
  }
  std::vector<std::vector<VertexId>> group(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) group[v] = {v};
  std::vector<VertexId> alive(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) alive[v] = v;

  Weight best = std::numeric_limits<Weight>::max();
  std::vector<VertexId> best_group;
  std::vector<Weight> key(static_cast<std::size_t>(n));
  std::vector<char> added(static_cast<std::size_t>(n));
  while (alive.size() > 1) {
    for (VertexId v : alive) {
      key[v] = 0;
      added[v] = 0;
    }
    VertexId prev = -1, last = -1;
    for (std::size_t step = 0; step < alive.size(); ++step) {
      VertexId pick = -1;
      for (VertexId v : alive)
        if (!added[v] && (pick < 0 || key[v] > key[pick])) pick = v;
      if (pick < 0) break;
      added[pick] = 1;
      prev = last;
      last = pick;
      for (VertexId v : alive)
        if (!added[v]) key[v] += w[static_cast<std::size_t>(pick) * n + v];
    }
    if (key[last] < best) {
      best = key[last];
      best_group = group[last];
    }
    // Merge last into prev.
    for (VertexId v : alive) {
      w[static_cast<std::size_t>(prev) * n + v] += w[static_cast<std::size_t>(last) * n + v];
      w[static_cast<std::size_t>(v) * n + prev] = w[static_cast<std::size_t>(prev) * n + v];
    }
    w[static_cast<std::size_t>(prev) * n + prev] = 0;
    group[prev].insert(group[prev].end(), group[last].begin(), group[last].end());
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  VertexSet side(n);
  for (VertexId v : best_group) side.insert(v);
  return Cut{std::move(side), best};
}

Cut naive_steiner(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& terminals,
                  FlowMeter& meter) {
  if (terminals.universe() != g.n()) throw InvalidInput("terminal set universe does not match graph");
  if (terminals.size() < 2) throw InvalidInput("Steiner cut needs |T| >= 2");
  const VertexId s = terminals.first();
  std::optional<Cut> best;
  terminals.for_each([&](VertexId t) {
    if (t == s) return;
    FlowResult fr = max_flow(engine, g, s, t, meter);
    if (!best || fr.value < best->weight) best = Cut{std::move(fr.min_side), fr.value};
  });
  return *best;
}

IsolatingCutResult naive_isolating(const MaxFlowEngine& engine, const WeightedGraph& g, const VertexSet& r,
                                   FlowMeter& meter) {
  if (r.universe() != g.n()) throw InvalidInput("terminal set universe does not match graph");
  if (r.size() < 2) throw InvalidInput("isolating cuts need |R| >= 2");
  IsolatingCutResult out;
  const int n = g.n();
  r.for_each([&](VertexId v) {
    // Ids: everything outside R \ {v} keeps its relative order, the sink is last.
    std::vector<VertexId> id(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> back;
    for (VertexId x = 0; x < n; ++x)
      if (x == v || !r.contains(x)) {
        id[x] = static_cast<VertexId>(back.size());
        back.push_back(x);
      }
    const VertexId sink = static_cast<VertexId>(back.size());
    for (VertexId x = 0; x < n; ++x)
      if (id[x] < 0) id[x] = sink;
    std::vector<EdgeTriple> triples;
    triples.reserve(static_cast<std::size_t>(g.m()));
    for (const auto& e : g.edges()) triples.push_back({id[e.u], id[e.v], e.w});
    WeightedGraph inst = build_graph(sink + 1, triples);
    FlowResult fr = max_flow(engine, inst, id[v], sink, out.phase_b);
    VertexSet side(n);
    fr.min_side.for_each([&](VertexId x) { side.insert(back[x]); });
    out.cuts.push_back(IsolatingCut{v, Cut{std::move(side), fr.value}, VertexSet(n)});
  });
  meter.merge(out.phase_b);
  return out;
}

CutConstraint CutConstraint::global() { return {}; }

CutConstraint CutConstraint::st(int n, VertexId s, VertexId t) {
  if (s == t) throw InvalidInput("s-t constraint needs s != t");
  CutConstraint c;
  c.kind = Kind::st;
  c.a = VertexSet(n, {s});
  c.b = VertexSet(n, {t});
  return c;
}

CutConstraint CutConstraint::separation(VertexSet a, VertexSet b) {
  if (a.empty() || b.empty() || a.intersects(b)) throw InvalidInput("A and B must be nonempty and disjoint");
  CutConstraint c;
  c.kind = Kind::separation;
  c.a = std::move(a);
  c.b = std::move(b);
  return c;
}

CutConstraint CutConstraint::isolating(VertexSet r, VertexId v) {
  if (!r.contains(v) || r.size() < 2) throw InvalidInput("isolating constraint needs v in R, |R| >= 2");
  CutConstraint c;
  c.kind = Kind::isolating;
  c.a = std::move(r);
  c.v = v;
  return c;
}

CutConstraint CutConstraint::terminal_split(VertexSet t) {
  if (t.size() < 2) throw InvalidInput("terminal split needs |T| >= 2");
  CutConstraint c;
  c.kind = Kind::terminal_split;
  c.a = std::move(t);
  return c;
}

namespace {

std::uint32_t mask_of(const VertexSet& s) {
  std::uint32_t m = 0;
  s.for_each([&](VertexId v) { m |= std::uint32_t{1} << v; });
  return m;
}

// Visits every side in Gray-code order with its cut weight.
template <typename F>
void for_each_side(const WeightedGraph& g, int free_bits, F&& f) {
  const int n = g.n();
  std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : g.edges()) {
    w[e.u * n + e.v] = e.w;
    w[e.v * n + e.u] = e.w;
  }
  std::vector<Weight> into(static_cast<std::size_t>(n), 0);  // weight from x into S
  std::uint32_t mask = 0;
  Weight cut = 0;
  const std::uint64_t limit = std::uint64_t{1} << free_bits;
  for (std::uint64_t step = 1; step < limit; ++step) {
    const int i = std::countr_zero(step);
    const Weight deg = g.degree(i);
    if ((mask >> i) & 1u) {
      mask &= ~(std::uint32_t{1} << i);
      for (int x = 0; x < n; ++x) into[x] -= w[x * n + i];
      cut -= deg - 2 * into[i];
    } else {
      cut += deg - 2 * into[i];
      mask |= std::uint32_t{1} << i;
      for (int x = 0; x < n; ++x) into[x] += w[x * n + i];
    }
    f(mask, cut);
  }
}

struct Scan {
  int free_bits;
  std::uint32_t full;
  std::uint32_t a = 0, b = 0;
};

Scan prepare(const WeightedGraph& g, const CutConstraint& c) {
  const int n = g.n();
  if (n < 2) throw InvalidInput("cut enumeration needs n >= 2");
  if (n > kMaxEnumerationVertices) throw InvalidInput("cut enumeration supports n <= 20");
  for (const VertexSet* s : {&c.a, &c.b})
    if (s->universe() != 0 && s->universe() != n) throw InvalidInput("constraint universe does not match graph");
  Scan sc{n, (std::uint32_t{1} << n) - 1};
  if (c.kind == CutConstraint::Kind::global || c.kind == CutConstraint::Kind::terminal_split) sc.free_bits = n - 1;
  if (c.a.universe()) sc.a = mask_of(c.a);
  if (c.b.universe()) sc.b = mask_of(c.b);
  return sc;
}

bool feasible(const CutConstraint& c, const Scan& sc, std::uint32_t mask) {
  if (mask == 0 || mask == sc.full) return false;
  switch (c.kind) {
    case CutConstraint::Kind::global:
      return true;
    case CutConstraint::Kind::st:
    case CutConstraint::Kind::separation:
      return (mask & sc.a) == sc.a && (mask & sc.b) == 0;
    case CutConstraint::Kind::isolating:
      return (mask & sc.a) == (std::uint32_t{1} << c.v);
    case CutConstraint::Kind::terminal_split:
      return (mask & sc.a) != 0 && (mask & sc.a) != sc.a;
  }
  return false;
}

VertexSet side_of(int n, std::uint32_t mask) {
  VertexSet s(n);
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1u) s.insert(i);
  return s;
}

// Fewer vertices first, then the bit pattern order of VertexSet::operator<.
bool preferred(std::uint32_t x, std::uint32_t y) {
  const int px = std::popcount(x), py = std::popcount(y);
  if (px != py) return px < py;
  return x < y;
}

}  // namespace

std::optional<Cut> enumerate_cuts(const WeightedGraph& g, const CutConstraint& c) {
  const Scan sc = prepare(g, c);
  bool found = false;
  Weight best = 0;
  std::uint32_t best_mask = 0;
  for_each_side(g, sc.free_bits, [&](std::uint32_t mask, Weight cut) {
    if (!feasible(c, sc, mask)) return;
    if (!found || cut < best || (cut == best && preferred(mask, best_mask))) {
      found = true;
      best = cut;
      best_mask = mask;
    }
  });
  if (!found) return std::nullopt;
  return Cut{side_of(g.n(), best_mask), best};
}

std::vector<Cut> enumerate_min_cuts(const WeightedGraph& g, const CutConstraint& c) {
  const Scan sc = prepare(g, c);
  bool found = false;
  Weight best = 0;
  std::vector<std::uint32_t> masks;
  for_each_side(g, sc.free_bits, [&](std::uint32_t mask, Weight cut) {
    if (!feasible(c, sc, mask)) return;
    if (!found || cut < best) {
      found = true;
      best = cut;
      masks.clear();
    }
    if (cut == best) masks.push_back(mask);
  });
  std::sort(masks.begin(), masks.end());
  std::vector<Cut> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(Cut{side_of(g.n(), m), best});
  return out;
}

}  // namespace isocut::oracles
