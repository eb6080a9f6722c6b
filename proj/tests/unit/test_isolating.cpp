#include <doctest.h>

#include "helpers.hpp"
#include "isocut/errors.hpp"
#include "isocut/isolating.hpp"
#include "isocut/oracles.hpp"

using namespace isocut;
using namespace testutil;

TEST_CASE("bipartition_schedule") {
  CHECK_THROWS_AS(bipartition_schedule(VertexSet(5, {1})), InvalidInput);
  auto two = bipartition_schedule(VertexSet(5, {1, 3}));
  REQUIRE(two.size() == 1);
  CHECK(two[0].a == VertexSet(5, {1}));
  CHECK(two[0].b == VertexSet(5, {3}));
  for (int size : {4, 5, 8, 9, 17}) {
    VertexSet r(40);
    for (int i = 0; i < size; ++i) r.insert(2 * i + 1);
    auto sched = bipartition_schedule(r);
    CHECK(static_cast<int>(sched.size()) == ceil_log2(size));
    for (const auto& bp : sched) {
      CHECK(!bp.a.empty());
      CHECK(!bp.b.empty());
      CHECK((bp.a | bp.b) == r);
      CHECK(!bp.a.intersects(bp.b));
    }
    auto m = r.members();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        bool sep = false;
        for (const auto& bp : sched) sep |= bp.a.contains(m[i]) != bp.a.contains(m[j]);
        CHECK(sep);
      }
  }
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(8) == 3);
}

TEST_CASE("isolating cut examples") {
  DinicEngine dinic;
  std::vector<EdgeTriple> e;
  for (int i = 1; i <= 4; ++i) e.push_back({0, i, 1});
  auto star = build_graph(5, e);
  FlowMeter meter;
  auto res = minimum_isolating_cuts(dinic, star, VertexSet(5, {1, 2, 3, 4}), meter);
  REQUIRE(res.cuts.size() == 4);
  for (const auto& c : res.cuts) {
    CHECK(c.cut.weight == 1);
    CHECK(c.cut.side == VertexSet(5, {c.terminal}));
  }
  CHECK(res.phase_a.call_count() == 2);
  CHECK(res.phase_b.call_count() == 4);
  CHECK(meter.amortized_calls() == 3);

  auto tri = build_graph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, 1}});
  FlowMeter m2;
  auto r2 = minimum_isolating_cuts(dinic, tri, VertexSet(6, {0, 5}), m2);
  CHECK(r2.at(0).cut.side == VertexSet(6, {0, 1, 2}));
  CHECK(r2.at(0).cut.weight == 1);
  CHECK(r2.at(5).cut.side == VertexSet(6, {3, 4, 5}));
  CHECK(r2.lightest().terminal == 0);

  // A terminal alone in its component: weight 0, side = the component.
  auto split = build_graph(5, {{0, 1, 3}, {2, 3, 1}, {3, 4, 1}});
  FlowMeter m3;
  auto r3 = minimum_isolating_cuts(dinic, split, VertexSet(5, {0, 2, 4}), m3);
  CHECK(r3.at(0).cut.weight == 0);
  CHECK(r3.at(0).cut.side == VertexSet(5, {0, 1}));
  CHECK(r3.at(2).cut.weight == 1);
}

TEST_CASE("isolating cuts vs naive and enumeration") {
  DinicEngine dinic;
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 10;
    auto g = random_graph(n, 0.35, 30, 3000 + trial);
    VertexSet r = random_subset(n, 2 + static_cast<int>(rng() % std::min(7, n - 1)), rng);
    FlowMeter meter, naive_meter;
    auto res = minimum_isolating_cuts(dinic, g, r, meter);
    auto naive = oracles::naive_isolating(dinic, g, r, naive_meter);
    CHECK(naive_meter.call_count() == r.size());
    CHECK(res.phase_a.call_count() == ceil_log2(r.size()));
    long long sn = 0, sm = 0;
    for (const auto& e : res.phase_b.log()) {
      sn += e.n;
      sm += e.m;
    }
    CHECK(sn <= n + r.size());
    CHECK(sm <= 2 * g.m() + r.size());
    for (const auto& comp : res.components) CHECK(comp.intersection_size(r) <= 1);
    for (std::size_t i = 0; i < res.cuts.size(); ++i) {
      const auto& c = res.cuts[i];
      CHECK(c.cut.weight == naive.cuts[i].cut.weight);
      CHECK((c.cut.side & r) == VertexSet(n, {c.terminal}));
      CHECK(c.cut.side.is_subset_of(c.component));
      CHECK(cut_weight(g, c.cut.side) == c.cut.weight);
      auto want = oracles::enumerate_cuts(g, oracles::CutConstraint::isolating(r, c.terminal));
      REQUIRE(want);
      CHECK(c.cut.side == want->side);
    }
  }
}

TEST_CASE("serial and parallel isolating cuts match") {
  DinicEngine dinic;
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_graph(60, 0.15, 50, 4000 + trial, true);
    std::mt19937_64 rng(trial);
    VertexSet r = random_subset(60, 12, rng);
    FlowMeter ms, mp;
    auto a = minimum_isolating_cuts(dinic, g, r, ms, Execution::serial);
    auto b = minimum_isolating_cuts(dinic, g, r, mp, Execution::parallel);
    CHECK(ms == mp);
    REQUIRE(a.cuts.size() == b.cuts.size());
    for (std::size_t i = 0; i < a.cuts.size(); ++i) {
      CHECK(a.cuts[i].cut.side == b.cuts[i].cut.side);
      CHECK(a.cuts[i].component == b.cuts[i].component);
    }
  }
}
