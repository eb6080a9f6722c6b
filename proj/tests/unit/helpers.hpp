#pragma once

#include <random>

#include "isocut/generators.hpp"
#include "isocut/graph.hpp"

namespace testutil {

using namespace isocut;

inline WeightedGraph random_graph(int n, double p, Weight max_w, std::uint64_t seed, bool connected = false) {
  GeneratorSpec s;
  s.kind = "gnp-weighted";
  s.n = n;
  s.p = p;
  s.max_weight = max_w;
  s.seed = seed;
  s.connected = connected;
  return generate(s);
}

inline WeightedGraph named(const std::string& kind, int n) {
  GeneratorSpec s;
  s.kind = kind;
  s.n = n;
  return generate(s);
}

inline VertexSet random_subset(int n, int size, std::mt19937_64& rng) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[i] = i;
  for (int i = 0; i < size; ++i) std::swap(ids[i], ids[i + static_cast<int>(rng() % static_cast<std::uint64_t>(n - i))]);
  VertexSet s(n);
  for (int i = 0; i < size; ++i) s.insert(ids[i]);
  return s;
}

// w(∂S) by a direct scan of the edge list.
inline Weight scan_cut(const WeightedGraph& g, const VertexSet& s) {
  Weight w = 0;
  for (const auto& e : g.edges())
    if (s.contains(e.u) != s.contains(e.v)) w += e.w;
  return w;
}

}  // namespace testutil
