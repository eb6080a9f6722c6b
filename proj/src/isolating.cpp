#include "isocut/isolating.hpp"

#include <algorithm>
#include <string>

#include "isocut/errors.hpp"

namespace isocut {

int ceil_log2(long long x) {
  int bits = 0;
  while ((1LL << bits) < x) ++bits;
  return bits;
}

std::vector<Bipartition> bipartition_schedule(const VertexSet& r) {
  if (r.size() < 2) throw InvalidInput("isolating cuts need |R| >= 2");
  const auto members = r.members();
  const int rounds = ceil_log2(r.size());
  std::vector<Bipartition> out;
  out.reserve(static_cast<std::size_t>(rounds));
  for (int bit = 0; bit < rounds; ++bit) {
    Bipartition p{VertexSet(r.universe()), VertexSet(r.universe())};
    for (std::size_t label = 0; label < members.size(); ++label)
      ((label >> bit) & 1 ? p.b : p.a).insert(members[label]);
    out.push_back(std::move(p));
  }
  return out;
}

const IsolatingCut& IsolatingCutResult::at(VertexId v) const {
  auto it = std::lower_bound(cuts.begin(), cuts.end(), v,
                             [](const IsolatingCut& c, VertexId x) { return c.terminal < x; });
  if (it == cuts.end() || it->terminal != v) throw InvalidInput("vertex is not an isolated terminal");
  return *it;
}

const IsolatingCut& IsolatingCutResult::lightest() const {
  return *std::min_element(cuts.begin(), cuts.end(), [](const IsolatingCut& x, const IsolatingCut& y) {
    return x.cut.weight < y.cut.weight;
  });
}

WeightedGraph component_instance(const WeightedGraph& g, const VertexSet& component,
                                 std::vector<VertexId>& local_to_global) {
  local_to_global = component.members();
  const int sink = static_cast<int>(local_to_global.size());
  std::vector<VertexId> local(static_cast<std::size_t>(g.n()), -1);
  for (int i = 0; i < sink; ++i) local[local_to_global[i]] = i;
  std::vector<EdgeTriple> triples;
  for (int i = 0; i < sink; ++i) {
    VertexId x = local_to_global[i];
    for (const auto& nb : g.neighbors(x)) {
      int j = local[nb.to];
      if (j < 0)
        triples.push_back({i, sink, nb.w});
      else if (i < j)
        triples.push_back({i, j, nb.w});
    }
  }
  return build_graph(sink + 1, triples);
}

IsolatingCutResult minimum_isolating_cuts(const MaxFlowEngine& engine, const WeightedGraph& g,
                                          const VertexSet& r, FlowMeter& meter, Execution exec) {
  if (r.universe() != g.n()) throw InvalidInput("terminal set universe does not match graph");
  const auto schedule = bipartition_schedule(r);
  const auto terminals = r.members();

  IsolatingCutResult result;

  // Phase A: one separation flow per bipartition.
  std::vector<Cut> sep(schedule.size());
  std::vector<FlowMeter> sep_meters(schedule.size());
  for_each_index(exec, static_cast<int>(schedule.size()), [&](int i) {
    sep[i] = min_cut_separating(engine, g, schedule[i].a, schedule[i].b, sep_meters[i]);
  });
  result.removed.assign(static_cast<std::size_t>(g.m()), 0);
  for (std::size_t i = 0; i < sep.size(); ++i) {
    result.phase_a.merge(sep_meters[i]);
    auto mask = cut_edge_mask(g, sep[i].side);
    for (std::size_t e = 0; e < mask.size(); ++e) result.removed[e] |= mask[e];
  }

  std::vector<int> comp_of;
  component_labels(g, result.removed, comp_of);
  result.components = components_after_removal_mask(g, result.removed);
  for (const auto& c : result.components)
    ISOCUT_ENSURE(c.intersection_size(r) <= 1, "component of G \\ F holds two terminals");

  // Phase B: v against the contraction of everything outside C_v.
  result.cuts.resize(terminals.size(), IsolatingCut{0, {}, {}});
  std::vector<FlowMeter> iso_meters(terminals.size());
  for_each_index(exec, static_cast<int>(terminals.size()), [&](int i) {
    const VertexId v = terminals[i];
    const VertexSet& comp = result.components[comp_of[v]];
    std::vector<VertexId> to_global;
    WeightedGraph inst = component_instance(g, comp, to_global);
    const VertexId source = static_cast<VertexId>(
        std::lower_bound(to_global.begin(), to_global.end(), v) - to_global.begin());
    FlowResult fr = max_flow(engine, inst, source, static_cast<VertexId>(to_global.size()), iso_meters[i]);
    VertexSet side(g.n());
    fr.min_side.for_each([&](VertexId x) {
      if (x < static_cast<VertexId>(to_global.size())) side.insert(to_global[x]);
    });
    result.cuts[i] = IsolatingCut{v, Cut{std::move(side), fr.value}, comp};
  });
  for (auto& m : iso_meters) result.phase_b.merge(m);

  for (const auto& c : result.cuts) {
    ISOCUT_ENSURE(c.cut.side.intersection_size(r) == 1 && c.cut.side.contains(c.terminal),
                  "isolating side must meet R exactly in its terminal");
  }

  meter.merge(result.phase_a);
  meter.merge_as_batch(result.phase_b);
  return result;
}

}  // namespace isocut
