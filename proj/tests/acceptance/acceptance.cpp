// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isocut/expander.hpp"
#include "isocut/generators.hpp"
#include "isocut/isolating.hpp"
#include "isocut/maxflow.hpp"
#include "isocut/oracles.hpp"
#include "isocut/splitters.hpp"
#include "isocut/steiner.hpp"

using namespace isocut;

namespace {

// Pinned tolerances and sizes.
constexpr int kC1Instances = 500;
constexpr int kC1MaxN = 40;
constexpr Weight kC1MaxWeight = 100;
constexpr int kC3Instances = 200;
constexpr int kC3MaxN = 14;
constexpr int kC4Instances = 200;
constexpr int kC4MaxN = 60;
constexpr int kC4Repeats = 3;
constexpr int kC5Instances = 200;
constexpr int kC5MaxN = 60;
constexpr int kC7Instances = 20;
constexpr int kC7Seeds = 100;
constexpr double kC7MinRate = 0.99;      // default rand_reps
constexpr double kC7DoubledRate = 1.0;   // doubled rand_reps
constexpr int kC9Instances = 100;
constexpr int kC9MaxN = 20;
constexpr int kC10Instances = 100;
constexpr int kC10MaxN = 14;
constexpr int kC11Instances = 1000;
constexpr int kC11MaxN = 12;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

AlgoConfig desk() {
  AlgoConfig c;
  c.phi = Ratio(1, 1);
  c.k = derived_k(c.phi);
  return c;
}

WeightedGraph gnp(int n, double p, Weight max_w, std::uint64_t seed, bool connected) {
  GeneratorSpec s;
  s.n = n;
  s.p = p;
  s.max_weight = max_w;
  s.seed = seed;
  s.connected = connected;
  return generate(s);
}

WeightedGraph named(const std::string& kind, int n) {
  GeneratorSpec s;
  s.kind = kind;
  s.n = n;
  return generate(s);
}

VertexSet random_subset(int n, int size, std::mt19937_64& rng) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[i] = i;
  for (int i = 0; i < size; ++i) std::swap(ids[i], ids[i + static_cast<int>(rng() % static_cast<std::uint64_t>(n - i))]);
  VertexSet s(n);
  for (int i = 0; i < size; ++i) s.insert(ids[i]);
  return s;
}

int below(std::mt19937_64& rng, int lo, int hi) {  // uniform in [lo, hi]
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string str(long long x) { return std::to_string(x); }

bool separates(const VertexSet& side, const VertexSet& t) {
  return side.intersects(t) && side.complement().intersects(t);
}

// ---------------------------------------------------------------------------

struct IsoInstance {
  WeightedGraph g;
  VertexSet r;
};

std::vector<IsoInstance> c1_instances() {
  std::mt19937_64 rng(1001);
  std::vector<IsoInstance> out;
  for (int i = 0; i < kC1Instances; ++i) {
    const int n = below(rng, 3, kC1MaxN);
    const double p = 0.08 + 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
    auto g = gnp(n, p, kC1MaxWeight, 50000 + i, false);
    auto r = random_subset(n, below(rng, 2, std::min(8, n)), rng);
    out.push_back({std::move(g), std::move(r)});
  }
  return out;
}

Outcome criterion1_2(bool budget_part) {
  Outcome o;
  DinicEngine dinic;
  long long phase_a = 0;
  for (const auto& [g, r] : c1_instances()) {
    FlowMeter m1, m2;
    auto fast = minimum_isolating_cuts(dinic, g, r, m1);
    if (budget_part) {
      if (fast.phase_a.call_count() != ceil_log2(r.size())) o.fail("phase-A calls != ceil(lg|R|)");
      long long sn = 0, sm = 0;
      for (const auto& e : fast.phase_b.log()) {
        sn += e.n;
        sm += e.m;
      }
      if (sn > g.n() + r.size()) o.fail("sum n_i = " + str(sn) + " > n + |R|");
      if (sm > 2LL * g.m() + r.size()) o.fail("sum m_i = " + str(sm) + " > 2m + |R|");
      if (m1.batch_count() != 1 || m1.amortized_calls() != ceil_log2(r.size()) + 1)
        o.fail("amortized calls != ceil(lg|R|) + 1");
      phase_a += fast.phase_a.call_count();
    } else {
      auto naive = oracles::naive_isolating(dinic, g, r, m2);
      for (std::size_t i = 0; i < fast.cuts.size(); ++i)
        if (fast.cuts[i].cut.weight != naive.cuts[i].cut.weight)
          o.fail("weight mismatch at terminal " + str(fast.cuts[i].terminal));
    }
  }
  if (o.pass)
    o.detail = budget_part ? str(kC1Instances) + " instances, " + str(phase_a) + " phase-A calls, size bounds hold"
                           : str(kC1Instances) + " instances, all per-terminal weights equal";
  return o;
}

Outcome criterion3() {
  Outcome o;
  DinicEngine dinic;
  std::mt19937_64 rng(3003);
  long long checked = 0;
  for (int i = 0; i < kC3Instances; ++i) {
    const int n = below(rng, 3, kC3MaxN);
    auto g = gnp(n, 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0, 20, 60000 + i, false);
    auto r = random_subset(n, below(rng, 2, n), rng);
    FlowMeter m;
    auto res = minimum_isolating_cuts(dinic, g, r, m);
    for (const auto& comp : res.components)
      if (comp.intersection_size(r) > 1) o.fail("component with two terminals");
    for (const auto& c : res.cuts) {
      auto all = oracles::enumerate_min_cuts(g, oracles::CutConstraint::isolating(r, c.terminal));
      if (all.empty() || all[0].weight != c.cut.weight) o.fail("isolating weight differs from enumeration");
      for (const auto& other : all)
        if (!c.cut.side.is_subset_of(other.side)) o.fail("S_v is not inclusion-minimal");
      if (!c.cut.side.is_subset_of(c.component)) o.fail("S_v not inside C_v");
      ++checked;
    }
  }
  if (o.pass) o.detail = str(kC3Instances) + " instances, " + str(checked) + " terminals checked";
  return o;
}

Outcome criterion4() {
  Outcome o;
  DinicEngine dinic;
  auto cfg = desk();
  std::vector<std::pair<std::string, WeightedGraph>> inst;
  std::mt19937_64 rng(4004);
  for (int i = 0; i < kC4Instances; ++i) {
    const int n = below(rng, 2, kC4MaxN);
    inst.emplace_back("gnp", gnp(n, 0.1 + 0.4 * static_cast<double>(rng() % 100) / 100.0, 1000, 70000 + i, false));
  }
  for (int n : {8, 20, 40, 60}) {
    inst.emplace_back("dumbbell", named("dumbbell", n));
    inst.emplace_back("cycle", named("cycle", n));
    inst.emplace_back("clique", named("clique", n));
    GeneratorSpec p;
    p.kind = "planted-cut";
    p.n = n;
    p.side = n / 3;
    p.cross = 3;
    p.p = 0.4;
    p.max_weight = 5;
    p.seed = static_cast<std::uint64_t>(n);
    inst.emplace_back("planted-cut", generate(p));
  }
  int fallbacks = 0;
  for (const auto& [kind, g] : inst) {
    const Weight sw = oracles::stoer_wagner(g).weight;
    auto first = global_mincut_det(dinic, g, cfg);
    if (first.lambda != sw) o.fail(kind + " n=" + str(g.n()) + ": det " + str(first.lambda) + " != " + str(sw));
    fallbacks += first.trace.fallback_used;
    for (int rep = 1; rep < kC4Repeats; ++rep) {
      auto again = global_mincut_det(dinic, g, cfg);
      if (!(again.best_cut.side == first.best_cut.side) || again.lambda != first.lambda ||
          !(again.meter == first.meter))
        o.fail(kind + " n=" + str(g.n()) + ": run " + str(rep) + " differs");
    }
  }
  if (o.pass)
    o.detail = str(static_cast<long long>(inst.size())) + " graphs equal Stoer-Wagner, " + str(kC4Repeats) +
               " identical runs each (" + str(fallbacks) + " finished via fallback)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  DinicEngine dinic;
  auto cfg = desk();
  std::mt19937_64 rng(5005);
  int fallbacks = 0;
  for (int i = 0; i < kC5Instances; ++i) {
    const int n = below(rng, 2, kC5MaxN);
    auto g = gnp(n, 0.1 + 0.4 * static_cast<double>(rng() % 100) / 100.0, 100, 80000 + i, i % 5 != 0);
    auto t = random_subset(n, below(rng, 2, n), rng);
    FlowMeter m;
    const Weight want = oracles::naive_steiner(dinic, g, t, m).weight;
    auto det = steiner_mincut_det(dinic, g, t, cfg);
    fallbacks += det.trace.fallback_used;
    if (det.lambda != want) o.fail("instance " + str(i) + ": det " + str(det.lambda) + " != " + str(want));
    if (!separates(det.best_cut.side, t)) o.fail("instance " + str(i) + ": cut does not separate T");
  }
  if (o.pass)
    o.detail = str(kC5Instances) + " instances equal naive (" + str(fallbacks) + " finished via fallback)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  DinicEngine dinic;
  auto cfg = desk();
  std::ostringstream os;
  for (const std::string family : {"dumbbell", "cycle"}) {
    double prev_ratio = 1e300;
    long long prev_budget = 0;
    int prev_n = 0;
    os << family << ":";
    for (int n : {64, 128, 256}) {
      auto g = named(family, n);
      const VertexSet t = VertexSet::full(n);
      FlowMeter naive;
      oracles::naive_steiner(dinic, g, t, naive);
      if (naive.call_count() != n - 1) o.fail(family + " n=" + str(n) + ": naive calls != n-1");
      auto det = steiner_mincut_det(dinic, g, t, cfg);
      const long long calls = det.meter.amortized_calls();
      const long long budget = det.trace.budget;
      if (calls > budget) o.fail(family + " n=" + str(n) + ": " + str(calls) + " calls > budget " + str(budget));
      const double ratio = static_cast<double>(calls) / static_cast<double>(naive.call_count());
      if (!(ratio < prev_ratio)) o.fail(family + ": det/naive ratio not strictly decreasing at n=" + str(n));
      // Sub-linear: budget grows by less than the factor n grows.
      if (prev_n && budget * prev_n >= prev_budget * n)
        o.fail(family + ": budget grows linearly or faster at n=" + str(n));
      os << " n=" << n << " det=" << calls << " budget=" << budget << " naive=" << naive.call_count()
         << (det.trace.fallback_used ? " (fallback)" : "") << ";";
      prev_ratio = ratio;
      prev_budget = budget;
      prev_n = n;
    }
    os << ' ';
  }
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome criterion7() {
  Outcome o;
  DinicEngine dinic;
  std::mt19937_64 rng(7007);
  struct Inst {
    WeightedGraph g;
    VertexSet t;
    Weight want;
  };
  std::vector<Inst> inst;
  for (int i = 0; i < kC7Instances; ++i) {
    const int n = below(rng, 8, 40);
    auto g = gnp(n, 0.15 + 0.3 * static_cast<double>(rng() % 100) / 100.0, 20, 90000 + i, true);
    auto t = i % 2 ? VertexSet::full(n) : random_subset(n, below(rng, 2, n), rng);
    FlowMeter m;
    const Weight want = oracles::naive_steiner(dinic, g, t, m).weight;
    inst.push_back({std::move(g), std::move(t), want});
  }
  long long hit = 0, hit2 = 0, total = 0;
  for (const auto& in : inst)
    for (int seed = 0; seed < kC7Seeds; ++seed) {
      AlgoConfig cfg = desk();
      cfg.seed = static_cast<std::uint64_t>(seed);
      cfg.exec = Execution::parallel;
      hit += steiner_mincut_rand(dinic, in.g, in.t, cfg).lambda == in.want;
      cfg.rand_reps = 2 * cfg.effective_rand_reps(in.g.n());
      hit2 += steiner_mincut_rand(dinic, in.g, in.t, cfg).lambda == in.want;
      ++total;
    }
  const double rate = static_cast<double>(hit) / static_cast<double>(total);
  const double rate2 = static_cast<double>(hit2) / static_cast<double>(total);
  if (rate < kC7MinRate) o.fail("default reps success " + std::to_string(rate));
  if (rate2 < kC7DoubledRate) o.fail("doubled reps success " + std::to_string(rate2));
  o.detail = "default " + str(hit) + "/" + str(total) + ", doubled " + str(hit2) + "/" + str(total);
  return o;
}

// Independent isolator check over all S with 1 <= |S| <= k.
bool isolates_all(const SetFamily& f, int n, int k, int min_size) {
  std::vector<std::uint32_t> masks;
  for (const auto& s : f.sets) {
    if (s.size() < min_size) return false;
    std::uint32_t m = 0;
    s.for_each([&](VertexId v) { m |= 1u << v; });
    masks.push_back(m);
  }
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (std::popcount(s) > k) continue;
    if (std::none_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return std::popcount(m & s) == 1; }))
      return false;
  }
  return true;
}

Outcome criterion8() {
  Outcome o;
  int families = 0;
  for (int n = 1; n <= 16; ++n)
    for (int k = 1; k <= std::min(4, n); ++k) {
      auto sp = splitter_family(n, k);
      if (!verify_splitter(sp)) o.fail("splitter n=" + str(n) + " k=" + str(k));
      if (static_cast<long long>(sp.functions.size()) > std::max(1LL, sp.size_bound))
        o.fail("splitter size bound n=" + str(n) + " k=" + str(k));
      auto iso = isolator_family(n, k);
      if (!isolates_all(iso, n, k, 0)) o.fail("isolator n=" + str(n) + " k=" + str(k));
      if (static_cast<long long>(iso.sets.size()) > iso.size_bound)
        o.fail("isolator size " + str(static_cast<long long>(iso.sets.size())) + " > " + str(iso.size_bound));
      families += 2;
      if (k < n) {
        auto m2 = isolator_family_min2(n, k);
        if (!isolates_all(m2, n, k, 2)) o.fail("min2 n=" + str(n) + " k=" + str(k));
        if (static_cast<long long>(m2.sets.size()) > m2.size_bound)
          o.fail("min2 size " + str(static_cast<long long>(m2.sets.size())) + " > " + str(m2.size_bound));
        ++families;
      }
    }
  if (o.pass) o.detail = str(families) + " families verified exhaustively within their recorded bounds";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9009);
  int done = 0, failures = 0, clusters = 0;
  for (int i = 0; i < kC9Instances; ++i) {
    const int n = below(rng, 1, kC9MaxN);
    WeightedGraph g;
    switch (i % 4) {
      case 0: g = gnp(n, 0.3, 10, 100000 + i, false); break;
      case 1: g = gnp(n, 0.6, 3, 100000 + i, true); break;
      case 2: g = n >= 4 && n % 2 == 0 ? named("dumbbell", n) : gnp(n, 0.4, 1, 100000 + i, false); break;
      default: g = n >= 3 ? named("cycle", n) : gnp(n, 0.5, 2, 100000 + i, false); break;
    }
    std::vector<Weight> dv(static_cast<std::size_t>(n));
    for (auto& x : dv) x = static_cast<Weight>(rng() % 5);
    if (i % 3 == 0)
      for (int v = 0; v < n; ++v) dv[v] = g.degree(v);
    DemandVector d(dv);
    const Ratio phi(1, 1 << (i % 5));  // 1, 1/2, ..., 1/16
    ExpanderDecomposition dec;
    try {
      dec = expander_decompose(g, d, phi);
    } catch (const DecompositionFailure&) {
      ++failures;
      continue;
    }
    ++done;
    Weight inter = 0;
    for (const auto& e : g.edges())
      if (dec.cluster_of(e.u) != dec.cluster_of(e.v)) inter += e.w;
    if (inter != dec.inter_cluster_weight) o.fail("inter-cluster weight mismatch");
    if (!dec.within_budget(n)) o.fail("instance " + str(i) + " over budget");
    VertexSet seen(n);
    for (const auto& c : dec.clusters) {
      if (c.intersects(seen)) o.fail("clusters overlap");
      seen = seen | c;
      auto aug = augmented_demands(g, d, c);
      c.for_each([&](VertexId v) {
        Weight out = 0;
        for (const auto& nb : g.neighbors(v))
          if (!c.contains(nb.to)) out += nb.w;
        if (aug[v] - d[v] != out || dec.augmented[v] != aug[v]) o.fail("augmentation identity");
      });
      auto chk = verify_expander(g, c, aug, phi);
      if (!chk.certified || !chk.expander) o.fail("cluster fails exhaustive check (instance " + str(i) + ")");
      ++clusters;
    }
    if (seen.size() != n) o.fail("clusters do not cover V");
  }
  if (failures) o.fail(str(failures) + " decompositions failed");
  if (o.pass) o.detail = str(done) + " decompositions, " + str(clusters) + " clusters certified";
  return o;
}

// Claims checked on every sparsification round the driver reports.
struct ClaimStats {
  long long rounds = 0, cut_ab_checks = 0, cut_v_checks = 0, count_checks = 0, hitting_checks = 0;
};

void check_round(const WeightedGraph& g, const VertexSet& t, Weight lambda, const std::vector<Cut>& min_cuts,
                 const SparsifyRound& r, Ratio phi, ClaimStats& st, Outcome& o) {
  if (!r.decomposition) return;
  ++st.rounds;
  const auto& dec = *r.decomposition;
  const __int128 p = phi.num(), q = phi.den();

  // ell <= 2 * inter / lambda over clusters whose boundary is at least lambda.
  if (dec.clusters.size() >= 2) {
    long long heavy = 0;
    for (const auto& c : dec.clusters) heavy += boundary_weight(g, c) >= lambda;
    if (static_cast<__int128>(heavy) * lambda > 2 * static_cast<__int128>(dec.inter_cluster_weight))
      o.fail("cluster count exceeds 2 * inter / lambda");
    if (t.size() == g.n() && heavy != static_cast<long long>(dec.clusters.size()))
      o.fail("cluster boundary below lambda with T = V");
    ++st.count_checks;
  }

  for (const auto& mc : min_cuts) {
    const VertexSet& a = mc.side;
    // cutAB: sum_i min{|U_i & A|, |U_i & B|} <= w(A, B) / (phi * lambda), valid once lambda_tilde >= lambda.
    if (r.lambda_tilde >= lambda) {
      __int128 sum = 0;
      for (const auto& c : dec.clusters) {
        const VertexSet ui = c & r.u;
        sum += std::min((ui & a).size(), (ui - a).size());
      }
      if (sum * p * lambda > static_cast<__int128>(mc.weight) * q) o.fail("cutAB violated");
      ++st.cut_ab_checks;
    }
    // cutV, restricted to clusters whose terminals the cut splits.
    __int128 gray = 0;
    for (const auto& c : dec.clusters) {
      const VertexSet ui = c & r.u;
      gray += (ui & a).size() > 0 && (ui - a).size() > 0;
    }
    if (gray * p > p + q) o.fail("cutV violated");
    ++st.cut_v_checks;

    // Hitting: U (1+1/phi)^3-balanced with witness (A, B) => U' meets both sides.
    if (r.lambda_tilde >= lambda) {
      const __int128 s1 = (r.u & a).size(), s2 = (r.u - a).size();
      const __int128 need = (p + q) * (p + q) * (p + q);  // compare s * p^3 >= (p + q)^3
      if (s1 * p * p * p >= need && s2 * p * p * p >= need) {
        ++st.hitting_checks;
        if (!r.next.intersects(a) || !(r.next - a).size()) o.fail("sparsified set misses a witness side");
      }
    }
  }
}

Outcome criterion10() {
  Outcome o;
  DinicEngine dinic;
  ClaimStats st;
  std::mt19937_64 rng(10010);
  auto run = [&](const WeightedGraph& g, const VertexSet& t, AlgoConfig cfg) {
    auto mins = oracles::enumerate_min_cuts(g, oracles::CutConstraint::terminal_split(t));
    if (mins.empty()) return;
    const Weight lambda = mins[0].weight;
    if (lambda == 0) return;  // disconnected terminals: the driver never decomposes
    cfg.observer = [&](const SparsifyRound& r) { check_round(g, t, lambda, mins, r, cfg.phi, st, o); };
    auto rep = steiner_mincut_det(dinic, g, t, cfg);
    if (rep.lambda != lambda) o.fail("det differs from enumeration");
  };
  for (int i = 0; i < kC10Instances; ++i) {
    const int n = below(rng, 8, kC10MaxN);
    auto g = gnp(n, 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0, 1 + static_cast<Weight>(rng() % 6),
                 110000 + i, true);
    auto t = i % 2 ? VertexSet::full(n) : random_subset(n, below(rng, 8, n), rng);
    AlgoConfig cfg = desk();
    if (i % 4 == 3) {  // smaller k exercises more rounds
      cfg.phi = Ratio(1, 1);
      cfg.k = 4;
    }
    run(g, t, cfg);
  }
  // Balanced instances need |U| >= 2 (1 + 1/phi)^3 = 16 at phi = 1.
  long long planted = 0;
  for (int n = 16; n <= 20; ++n)
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      GeneratorSpec s;
      s.kind = "planted-cut";
      s.n = n;
      s.side = n / 2;
      s.cross = 1 + static_cast<Weight>(seed % 2);
      s.p = 0.5;
      s.seed = seed * 97 + static_cast<std::uint64_t>(n);
      run(generate(s), VertexSet::full(n), desk());
      ++planted;
    }
  if (st.hitting_checks == 0) o.fail("no balanced round was observed");
  if (o.pass)
    o.detail = str(st.rounds) + " rounds on " + str(kC10Instances + planted) + " instances: " +
               str(st.cut_ab_checks) + " cutAB, " + str(st.cut_v_checks) + " cutV, " + str(st.count_checks) +
               " cluster-count, " + str(st.hitting_checks) + " hitting checks";
  return o;
}

Outcome criterion11() {
  Outcome o;
  DinicEngine dinic;
  std::mt19937_64 rng(11011);
  for (int i = 0; i < kC11Instances; ++i) {
    const int n = below(rng, 2, kC11MaxN);
    auto g = gnp(n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0, 1 + static_cast<Weight>(rng() % 20),
                 120000 + i, false);
    const VertexId s = below(rng, 0, n - 1);
    VertexId t = below(rng, 0, n - 2);
    if (t >= s) ++t;
    FlowMeter m;
    auto fr = max_flow(dinic, g, s, t, m);
    auto all = oracles::enumerate_min_cuts(g, oracles::CutConstraint::st(n, s, t));
    if (all.empty() || fr.value != all[0].weight) {
      o.fail("instance " + str(i) + ": value mismatch");
      continue;
    }
    auto best = oracles::enumerate_cuts(g, oracles::CutConstraint::st(n, s, t));
    if (!(best->side == fr.min_side)) o.fail("instance " + str(i) + ": min_side differs from enumeration");
    for (const auto& c : all)
      if (!fr.min_side.is_subset_of(c.side)) o.fail("instance " + str(i) + ": min_side not inclusion-minimal");
  }
  if (o.pass) o.detail = str(kC11Instances) + " instances, values and minimal sides equal";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"isolating-cut exactness", [] { return criterion1_2(false); }},
      {"isolating-cut budget", [] { return criterion1_2(true); }},
      {"containment and structure", criterion3},
      {"deterministic global min-cut exactness", criterion4},
      {"deterministic Steiner exactness", criterion5},
      {"call budget vs baseline", criterion6},
      {"randomized Steiner success rate", criterion7},
      {"splitter/isolator verification", criterion8},
      {"expander decomposition certification", criterion9},
      {"claim-level invariants", criterion10},
      {"max-flow correctness", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
