#include "isocut/generators.hpp"

#include <string>
#include <vector>

#include "isocut/errors.hpp"

namespace isocut {

bool is_connected(const WeightedGraph& g) {
  if (g.n() <= 1) return true;
  std::vector<int> label;
  std::vector<char> none(static_cast<std::size_t>(g.m()), 0);
  return component_labels(g, none, label) == 1;
}

namespace {

Weight draw_weight(std::mt19937_64& rng, const GeneratorSpec& s) {
  return s.min_weight + static_cast<Weight>(uniform_below(rng, static_cast<std::uint64_t>(s.max_weight - s.min_weight + 1)));
}

void add_clique(std::vector<EdgeTriple>& e, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    for (int j = i + 1; j < hi; ++j) e.push_back({i, j, 1});
}

// Random part on [lo, hi): a Hamiltonian cycle plus G(n, p) edges.
void add_random_part(std::vector<EdgeTriple>& e, int lo, int hi, std::mt19937_64& rng, const GeneratorSpec& s) {
  const int size = hi - lo;
  if (size >= 2)
    for (int i = lo; i < hi; ++i) {
      const int j = i + 1 < hi ? i + 1 : lo;
      if (size == 2 && i == hi - 1) break;
      e.push_back({i, j, draw_weight(rng, s)});
    }
  for (int i = lo; i < hi; ++i)
    for (int j = i + 1; j < hi; ++j)
      if (coin(rng, s.p)) e.push_back({i, j, draw_weight(rng, s)});
}

WeightedGraph planted(const GeneratorSpec& s) {
  const int n = s.n;
  if (s.side < 2 || n - s.side < 2) throw InvalidInput("planted-cut needs both sides of size >= 2");
  if (s.cross < 1) throw InvalidInput("planted-cut needs cross >= 1");
  std::mt19937_64 rng(s.seed);
  std::vector<EdgeTriple> e;
  add_random_part(e, 0, s.side, rng, s);
  add_random_part(e, s.side, n, rng, s);
  for (Weight c = 0; c < s.cross; ++c) {
    const int a = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(s.side)));
    const int b = s.side + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - s.side)));
    e.push_back({a, b, 1});
  }
  // Raise light vertices above the planted weight with edges inside their side.
  for (int round = 0; round < n * n; ++round) {
    WeightedGraph g = build_graph(n, e);
    int light = -1;
    for (int v = 0; v < n && light < 0; ++v)
      if (g.degree(v) <= s.cross) light = v;
    if (light < 0) return g;
    const int lo = light < s.side ? 0 : s.side, hi = light < s.side ? s.side : n;
    int other = lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo - 1)));
    if (other >= light) ++other;
    e.push_back({light, other, s.cross});
  }
  throw InvalidInput("planted-cut generation did not converge");
}

}  // namespace

WeightedGraph generate(const GeneratorSpec& s) {
  if (s.n < 1) throw InvalidInput("generator needs n >= 1");
  if (s.min_weight < 1 || s.max_weight < s.min_weight || s.max_weight > kMaxEdgeWeight)
    throw InvalidInput("weight range must satisfy 1 <= min <= max <= 2^40");
  if (s.p < 0 || s.p > 1) throw InvalidInput("p must lie in [0, 1]");
  std::vector<EdgeTriple> e;
  const int n = s.n;
  if (s.kind == "gnp-weighted") {
    std::mt19937_64 rng(s.seed);
    for (int attempt = 0; attempt < kGeneratorRetryCap; ++attempt) {
      e.clear();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (coin(rng, s.p)) e.push_back({i, j, draw_weight(rng, s)});
      WeightedGraph g = build_graph(n, e);
      if (!s.connected || is_connected(g)) return g;
    }
    throw InvalidInput("no connected gnp graph within " + std::to_string(kGeneratorRetryCap) + " attempts");
  }
  if (s.kind == "planted-cut") return planted(s);
  if (s.kind == "dumbbell") {
    if (n < 4 || n % 2) throw InvalidInput("dumbbell needs an even n >= 4");
    add_clique(e, 0, n / 2);
    add_clique(e, n / 2, n);
    e.push_back({n / 2 - 1, n / 2, 1});
    return build_graph(n, e);
  }
  if (s.kind == "cycle") {
    if (n < 3) throw InvalidInput("cycle needs n >= 3");
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1});
    return build_graph(n, e);
  }
  if (s.kind == "clique") {
    add_clique(e, 0, n);
    return build_graph(n, e);
  }
  if (s.kind == "grid") {
    int rows = s.rows, cols = s.cols;
    if (rows <= 0 && cols <= 0) {
      rows = 1;
      while ((rows + 1) * (rows + 1) <= n) ++rows;
    }
    if (rows <= 0) rows = n / cols;
    if (cols <= 0) cols = n / rows;
    if (rows < 1 || cols < 1 || rows * cols != n) throw InvalidInput("grid needs rows * cols == n");
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        const int v = r * cols + c;
        if (c + 1 < cols) e.push_back({v, v + 1, 1});
        if (r + 1 < rows) e.push_back({v, v + cols, 1});
      }
    return build_graph(n, e);
  }
  throw InvalidInput("unknown generator kind '" + s.kind + "'");
}

}  // namespace isocut
