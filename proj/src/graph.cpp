#include "isocut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "isocut/errors.hpp"

namespace isocut {

WeightedGraph build_graph(int n, std::span<const EdgeTriple> triples) {
  if (n < 0) throw InvalidInput("negative vertex count");
  std::vector<Edge> raw;
  raw.reserve(triples.size());
  for (const auto& t : triples) {
    if (t.u < 0 || t.u >= n || t.v < 0 || t.v >= n)
      throw InvalidInput("edge (" + std::to_string(t.u) + "," + std::to_string(t.v) +
                         ") has vertex id outside [0," + std::to_string(n) + ")");
    if (t.w < 0) throw InvalidInput("negative edge weight");
    if (t.w > kMaxEdgeWeight) throw InvalidInput("edge weight exceeds 2^40");
    if (t.u == t.v || t.w == 0) continue;
    raw.push_back({std::min(t.u, t.v), std::max(t.u, t.v), t.w});
  }
  std::sort(raw.begin(), raw.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });

  WeightedGraph g;
  g.n_ = n;
  Weight total = 0;
  for (const auto& e : raw) {
    if (__builtin_add_overflow(total, e.w, &total) || total >= kMaxTotalWeight)
      throw InvalidInput("total edge weight reaches 2^62");
    if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v)
      g.edges_.back().w += e.w;
    else
      g.edges_.push_back(e);
  }
  g.total_ = total;

  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.degree_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
    g.degree_[e.u] += e.w;
    g.degree_[e.v] += e.w;
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adj_.resize(g.edges_.size() * 2);
  std::vector<int> pos(g.offsets_.begin(), g.offsets_.end() - 1);
  for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
    const auto& e = g.edges_[i];
    g.adj_[pos[e.u]++] = {e.v, e.w, i};
    g.adj_[pos[e.v]++] = {e.u, e.w, i};
  }
  return g;
}

WeightedGraph build_graph(int n, std::initializer_list<EdgeTriple> triples) {
  return build_graph(n, std::span<const EdgeTriple>(triples.begin(), triples.size()));
}

int WeightedGraph::find_edge(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                             [](const Edge& e, const std::pair<int, int>& key) {
                               return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return -1;
  return static_cast<int>(it - edges_.begin());
}

Weight boundary_weight(const WeightedGraph& g, const VertexSet& side) {
  if (side.universe() != g.n()) throw InvalidInput("vertex set universe does not match graph");
  Weight w = 0;
  for (const auto& e : g.edges())
    if (side.contains(e.u) != side.contains(e.v)) w += e.w;
  return w;
}

Weight cut_weight(const WeightedGraph& g, const VertexSet& side) {
  if (side.universe() != g.n()) throw InvalidInput("vertex set universe does not match graph");
  if (side.empty() || side.size() == g.n()) throw InvalidInput("cut side must be a proper nonempty subset");
  return boundary_weight(g, side);
}

std::vector<char> cut_edge_mask(const WeightedGraph& g, const VertexSet& side) {
  std::vector<char> mask(static_cast<std::size_t>(g.m()), 0);
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    mask[i] = side.contains(edges[i].u) != side.contains(edges[i].v);
  return mask;
}

VertexSet ContractionMap::lift(const VertexSet& contracted_side) const {
  VertexSet out(original_n);
  for (VertexId v = 0; v < original_n; ++v)
    if (contracted_side.contains(label[v])) out.insert(v);
  return out;
}

ContractionMap contract_labels(const WeightedGraph& g, std::vector<VertexId> label, int classes) {
  if (static_cast<int>(label.size()) != g.n()) throw InvalidInput("label map size differs from n");
  std::vector<char> seen(static_cast<std::size_t>(std::max(classes, 0)), 0);
  for (VertexId c : label) {
    if (c < 0 || c >= classes) throw InvalidInput("label outside class range");
    seen[c] = 1;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw InvalidInput("contraction classes must be nonempty");
  std::vector<EdgeTriple> triples;
  triples.reserve(static_cast<std::size_t>(g.m()));
  for (const auto& e : g.edges())
    if (label[e.u] != label[e.v]) triples.push_back({label[e.u], label[e.v], e.w});
  ContractionMap map;
  map.original_n = g.n();
  map.graph = build_graph(classes, triples);
  map.label = std::move(label);
  return map;
}

ContractionMap contract(const WeightedGraph& g, std::span<const VertexSet> classes) {
  std::vector<VertexId> label(static_cast<std::size_t>(g.n()), -1);
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    if (classes[c].universe() != g.n()) throw InvalidInput("class universe does not match graph");
    if (classes[c].empty()) throw InvalidInput("empty contraction class");
    classes[c].for_each([&](VertexId v) {
      if (label[v] != -1) throw InvalidInput("contraction classes overlap");
      label[v] = c;
    });
  }
  if (std::find(label.begin(), label.end(), -1) != label.end())
    throw InvalidInput("contraction classes do not cover V");
  return contract_labels(g, std::move(label), static_cast<int>(classes.size()));
}

int component_labels(const WeightedGraph& g, std::span<const char> removed_mask,
                     std::vector<int>& label) {
  label.assign(static_cast<std::size_t>(g.n()), -1);
  std::vector<VertexId> stack;
  int count = 0;
  for (VertexId s = 0; s < g.n(); ++s) {
    if (label[s] != -1) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(x)) {
        if (!removed_mask.empty() && removed_mask[nb.edge]) continue;
        if (label[nb.to] == -1) {
          label[nb.to] = count;
          stack.push_back(nb.to);
        }
      }
    }
    ++count;
  }
  return count;
}

std::vector<VertexSet> components_after_removal_mask(const WeightedGraph& g,
                                                     std::span<const char> removed_mask) {
  std::vector<int> label;
  int count = component_labels(g, removed_mask, label);
  std::vector<VertexSet> comps(static_cast<std::size_t>(count), VertexSet(g.n()));
  for (VertexId v = 0; v < g.n(); ++v) comps[label[v]].insert(v);
  return comps;
}

std::vector<VertexSet> components_after_removal(const WeightedGraph& g,
                                                std::span<const std::pair<VertexId, VertexId>> removed) {
  std::vector<char> mask(static_cast<std::size_t>(g.m()), 0);
  for (auto [u, v] : removed) {
    int idx = g.find_edge(u, v);
    if (idx < 0)
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in graph");
    mask[idx] = 1;
  }
  return components_after_removal_mask(g, mask);
}

}  // namespace isocut
