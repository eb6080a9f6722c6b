#include "isocut/splitters.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <mutex>
#include <set>
#include <string>

#include "isocut/errors.hpp"

namespace isocut {
namespace {

// Largest t with q^t <= x (0 when x < q).
int floor_log(long long x, long long q) {
  int t = 0;
  for (long long p = q; p <= x; p *= q) {
    ++t;
    if (p > std::numeric_limits<long long>::max() / q) break;
  }
  return t;
}

void check_nk(int n, int k) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  if (k > n) throw InvalidInput("k must not exceed n");
}

// Calls f(mask) for every subset of [n] (n <= 63) of size in [lo, hi].
template <typename F>
bool for_each_small_subset(int n, int lo, int hi, F&& f) {
  std::vector<int> idx;
  for (int size = lo; size <= hi; ++size) {
    idx.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (int i : idx) mask |= std::uint64_t{1} << i;
      if (!f(mask, idx)) return false;
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

std::uint64_t to_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  s.for_each([&](VertexId v) { m |= std::uint64_t{1} << v; });
  return m;
}

void dedupe(std::vector<VertexSet>& sets) {
  std::set<VertexSet> seen;
  std::vector<VertexSet> out;
  for (auto& s : sets)
    if (!s.empty() && seen.insert(s).second) out.push_back(std::move(s));
  sets = std::move(out);
}

constexpr int kAutoVerifyLimit = 16;

long long splitter_preimage_bound(int n, int k) {
  long long total = 0;
  for (int kk = 1; kk <= k; ++kk) {
    auto fam = splitter_family(n, kk);
    total += static_cast<long long>(fam.functions.size()) * std::min<long long>(1LL * kk * kk, n);
  }
  return total;
}

}  // namespace

std::vector<long long> primes_from(long long from, int count) {
  // Shared table grown by doubling sieves; families ask for the same primes
  // many times while choosing their threshold.
  static std::mutex table_mutex;
  static std::vector<long long> table;
  static long long sieved = 1;
  std::lock_guard lock(table_mutex);
  from = std::max(2LL, from);
  auto available = [&] {
    auto it = std::lower_bound(table.begin(), table.end(), from);
    return table.end() - it;
  };
  while (available() < count) {
    const long long hi = std::max(2 * sieved, from + 64LL * count + 64);
    std::vector<char> composite(static_cast<std::size_t>(hi - sieved), 0);  // index x - sieved - 1
    for (long long d = 2; d * d <= hi; ++d) {
      long long start = std::max(d * d, (sieved + d) / d * d);
      for (long long x = start; x <= hi; x += d) composite[x - sieved - 1] = 1;
    }
    for (long long x = sieved + 1; x <= hi; ++x)
      if (x >= 2 && !composite[x - sieved - 1]) table.push_back(x);
    sieved = hi;
  }
  auto it = std::lower_bound(table.begin(), table.end(), from);
  return std::vector<long long>(it, it + count);
}

int SplitterFunction::operator()(int x) const {
  switch (kind) {
    case Kind::constant:
      return 0;
    case Kind::identity:
      return x;
    case Kind::residue:
      return static_cast<int>(x % prime);
    case Kind::residue_hash:
      return static_cast<int>(((multiplier * (x % prime)) % prime) % range);
  }
  return 0;
}

SplitterFamily splitter_family(int n, int k) {
  check_nk(n, k);
  SplitterFamily fam;
  fam.n = n;
  fam.k = k;
  const int range = k * k;
  if (k == 1) {
    fam.functions.push_back({SplitterFunction::Kind::constant, 0, 0, 1});
    fam.size_bound = 1;
    return fam;
  }
  if (n <= range) {
    fam.functions.push_back({SplitterFunction::Kind::identity, 0, 0, range});
    fam.size_bound = 1;
    return fam;
  }

  const long long pairs = 1LL * k * (k - 1) / 2;
  auto cost = [&](const std::vector<long long>& primes) {
    long long c = 0;
    for (long long p : primes) c += p <= range ? 1 : p - 1;
    return c;
  };
  long long best_q = 2, best_cost = std::numeric_limits<long long>::max();
  for (long long q = 2; q <= n; ++q) {
    const int count = static_cast<int>(pairs * floor_log(n - 1, q) + 1);
    const long long c = cost(primes_from(q, count));
    if (c < best_cost) {
      best_cost = c;
      best_q = q;
    }
  }
  const int count = static_cast<int>(pairs * floor_log(n - 1, best_q) + 1);
  const auto primes = primes_from(best_q, count);
  fam.threshold = best_q;
  fam.prime_count = count;
  fam.largest_prime = primes.back();
  fam.size_bound = static_cast<long long>(count) * std::max(1LL, fam.largest_prime - 1);
  for (long long p : primes) {
    if (p <= range) {
      fam.functions.push_back({SplitterFunction::Kind::residue, p, 1, range});
    } else {
      for (long long a = 1; a < p; ++a)
        fam.functions.push_back({SplitterFunction::Kind::residue_hash, p, a, range});
    }
  }
  if (n <= kAutoVerifyLimit && !verify_splitter(fam))
    throw ContractViolation("splitter family for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                            " leaves a k-subset unsplit");
  return fam;
}

bool verify_splitter(const SplitterFamily& fam) {
  if (fam.n > 63) throw InvalidInput("exhaustive splitter verification supports n <= 63");
  std::vector<int> seen(static_cast<std::size_t>(fam.k * fam.k + fam.n), -1);
  int stamp = 0;
  return for_each_small_subset(fam.n, fam.k, fam.k, [&](std::uint64_t, const std::vector<int>& idx) {
    for (const auto& f : fam.functions) {
      ++stamp;
      bool injective = true;
      for (int x : idx) {
        int y = f(x);
        if (seen[y] == stamp) {
          injective = false;
          break;
        }
        seen[y] = stamp;
      }
      if (injective) return true;
    }
    return false;
  });
}

std::string to_string(SetFamily::Provenance p) {
  switch (p) {
    case SetFamily::Provenance::splitter_preimages:
      return "splitter-derived";
    case SetFamily::Provenance::residue_classes:
      return "residue-derived";
    case SetFamily::Provenance::padded:
      return "padded";
  }
  return "unknown";
}

SetFamily isolator_family_from_splitters(int n, int k) {
  check_nk(n, k);
  SetFamily out;
  out.universe = n;
  out.k = k;
  out.provenance = SetFamily::Provenance::splitter_preimages;
  for (int kk = 1; kk <= k; ++kk) {
    const auto fam = splitter_family(n, kk);
    out.size_bound += static_cast<long long>(fam.functions.size()) * std::min<long long>(1LL * kk * kk, n);
    for (const auto& f : fam.functions) {
      std::vector<VertexSet> classes(static_cast<std::size_t>(std::max(kk * kk, n)), VertexSet(n));
      for (int x = 0; x < n; ++x) classes[f(x)].insert(x);
      for (auto& c : classes)
        if (!c.empty()) out.sets.push_back(std::move(c));
    }
  }
  out.bound_formula = "sum_{k'<=k} |splitter(n,k')| * min(k'^2, n)";
  dedupe(out.sets);
  return out;
}

namespace {

int residue_prime_count(int n, int k, long long q) { return (k - 1) * floor_log(n - 1, q) + 1; }

SetFamily residue_family_with_threshold(int n, int k, long long q) {
  const int count = residue_prime_count(n, k, q);
  const auto primes = primes_from(q, count);
  SetFamily out;
  out.universe = n;
  out.k = k;
  out.provenance = SetFamily::Provenance::residue_classes;
  out.size_bound = static_cast<long long>(count) * std::min<long long>(primes.back(), n);
  out.bound_formula = "M * min(p_M, n), M = (k-1)*floor(log_q(n-1)) + 1, q = " + std::to_string(q);
  for (long long p : primes) {
    const long long classes = std::min<long long>(p, n);
    for (long long j = 0; j < classes; ++j) {
      VertexSet s(n);
      for (long long x = j; x < n; x += p) s.insert(static_cast<VertexId>(x));
      out.sets.push_back(std::move(s));
    }
  }
  dedupe(out.sets);
  return out;
}

int ceil_lg(long long x) {
  int b = 0;
  while ((1LL << b) < x) ++b;
  return b;
}

// Isolating-cut flows spent on the padded family: ceil(lg|R|) + 1 per member,
// singletons turned into k pairs of cost 2.
long long padded_cost_of_residues(int n, int k, long long q) {
  const auto primes = primes_from(q, residue_prime_count(n, k, q));
  std::vector<char> single(static_cast<std::size_t>(n), 0);
  long long cost = 0;
  for (long long p : primes) {
    for (long long j = 0; j < std::min<long long>(p, n); ++j) {
      const long long size = (n - j + p - 1) / p;
      if (size >= 2)
        cost += ceil_lg(size) + 1;
      else
        single[j] = 1;
    }
  }
  for (char c : single)
    if (c) cost += 2LL * k;
  return cost;
}

long long padded_cost(const SetFamily& fam) {
  long long cost = 0;
  for (const auto& s : fam.sets) cost += s.size() >= 2 ? ceil_lg(s.size()) + 1 : 2LL * fam.k;
  return cost;
}

long long best_residue_threshold(int n, int k) {
  // Size after deduplication: every prime >= n yields the same singletons.
  auto size_for = [&](const std::vector<long long>& primes) {
    long long s = 0;
    bool singletons = false;
    for (long long p : primes) {
      if (p < n)
        s += p;
      else
        singletons = true;
    }
    return s + (singletons ? n : 0);
  };
  long long best_q = 2, best_size = std::numeric_limits<long long>::max();
  for (long long q = 2; q <= std::max(2, n); ++q) {
    const long long s = size_for(primes_from(q, residue_prime_count(n, k, q)));
    if (s < best_size) {
      best_size = s;
      best_q = q;
    }
  }
  return best_q;
}

}  // namespace

SetFamily isolator_family_from_residues(int n, int k) {
  check_nk(n, k);
  return residue_family_with_threshold(n, k, best_residue_threshold(n, k));
}

SetFamily isolator_family(int n, int k) {
  check_nk(n, k);
  SetFamily residues = isolator_family_from_residues(n, k);
  SetFamily fam = splitter_preimage_bound(n, k) < static_cast<long long>(residues.sets.size())
                      ? isolator_family_from_splitters(n, k)
                      : std::move(residues);
  if (n <= kAutoVerifyLimit) {
    if (!verify_isolator(fam, k))
      throw ContractViolation("isolator family for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                              " misses a set");
    fam.verified = true;
  }
  return fam;
}

SetFamily isolator_family_min2(int n, int k) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  if (k >= n) throw InvalidInput("size->=2 isolator family needs k < n");
  // The base family is picked for the cheapest padded result rather than the
  // smallest size: residue thresholds that leave few singletons win.
  long long best_q = 2, best_cost = std::numeric_limits<long long>::max();
  std::pair<int, long long> last{-1, -1};
  for (long long q = 2; q <= std::max(2, n); ++q) {
    const std::pair<int, long long> key{residue_prime_count(n, k, q), primes_from(q, 1).front()};
    if (key == last) continue;
    last = key;
    const long long c = padded_cost_of_residues(n, k, q);
    if (c < best_cost) {
      best_cost = c;
      best_q = q;
    }
  }
  SetFamily base = residue_family_with_threshold(n, k, best_q);
  if (splitter_preimage_bound(n, k) < best_cost) {
    SetFamily alt = isolator_family_from_splitters(n, k);
    if (padded_cost(alt) < padded_cost(base)) base = std::move(alt);
  }
  SetFamily out;
  out.universe = n;
  out.k = k;
  out.provenance = SetFamily::Provenance::padded;
  out.size_bound = static_cast<long long>(k) * base.size_bound;
  out.bound_formula = "k * (" + base.bound_formula + ")";
  for (const auto& s : base.sets) {
    if (s.size() >= 2) {
      out.sets.push_back(s);
      continue;
    }
    if (s.empty()) continue;
    const VertexId x = s.first();
    int added = 0;
    for (VertexId y = 0; y < n && added < k; ++y) {
      if (y == x) continue;
      out.sets.push_back(VertexSet(n, {x, y}));
      ++added;
    }
  }
  dedupe(out.sets);
  if (n <= kAutoVerifyLimit) {
    if (!verify_isolator(out, k, 2))
      throw ContractViolation("padded isolator family for n=" + std::to_string(n) + " misses a set");
    out.verified = true;
  }
  return out;
}

bool verify_isolator(const SetFamily& family, int k, int min_set_size) {
  if (family.universe > 63) throw InvalidInput("exhaustive isolator verification supports n <= 63");
  for (const auto& s : family.sets)
    if (s.size() < min_set_size) return false;
  std::vector<std::uint64_t> masks;
  masks.reserve(family.sets.size());
  for (const auto& s : family.sets) masks.push_back(to_mask(s));
  return for_each_small_subset(family.universe, 1, std::min(k, family.universe),
                               [&](std::uint64_t mask, const std::vector<int>&) {
                                 for (auto f : masks)
                                   if (std::popcount(mask & f) == 1) return true;
                                 return false;
                               });
}

}  // namespace isocut
