#pragma once

#include <string>
#include <vector>

#include "isocut/vertex_set.hpp"

namespace isocut {

/// A map [n] -> [range] of one of the shapes
///   constant:     x -> 0
///   identity:     x -> x
///   residue:      x -> x mod p                       (p <= range)
///   residue_hash: x -> ((a * (x mod p)) mod p) mod range
struct SplitterFunction {
  enum class Kind { constant, identity, residue, residue_hash };
  Kind kind = Kind::constant;
  long long prime = 0;
  long long multiplier = 0;
  int range = 1;

  int operator()(int x) const;
};

struct SplitterFamily {
  int n = 0;
  int k = 0;
  std::vector<SplitterFunction> functions;
  long long threshold = 0;    // primes are taken from [threshold, ...)
  int prime_count = 0;        // M: number of primes used
  long long largest_prime = 0;
  long long size_bound = 0;   // M * max(1, largest_prime - 1)
};

/// Functions [n] -> [k^2] such that every k-subset of [n] is mapped
/// injectively by at least one member. Throws InvalidInput unless 1 <= k <= n.
///
/// Construction. For n <= k^2 the identity suffices. Otherwise pick a
/// threshold q and the first M = C(k,2) * floor(log_q(n-1)) + 1 primes >= q.
/// A difference d in [1, n) has at most floor(log_q d) distinct prime factors
/// >= q, so at most M-1 of the chosen primes divide one of the C(k,2)
/// differences of a k-set S, and some prime p leaves S injective mod p. If
/// p <= k^2, x mod p is already a member. Otherwise the residues are spread by
/// y -> ((a*y) mod p) mod k^2 for every a in [1, p): a fixed pair collides for
/// at most 2(p-1)/k^2 values of a, so C(k,2) pairs rule out fewer than p-1 of
/// them. q is chosen to minimize the member count.
SplitterFamily splitter_family(int n, int k);

/// True iff every k-subset of [n] is split. Exhaustive; intended for small n.
bool verify_splitter(const SplitterFamily& family);

struct SetFamily {
  enum class Provenance { splitter_preimages, residue_classes, padded };
  int universe = 0;
  int k = 0;
  std::vector<VertexSet> sets;
  Provenance provenance = Provenance::residue_classes;
  long long size_bound = 0;
  std::string bound_formula;
  bool verified = false;  // exhaustive check ran and passed
};

std::string to_string(SetFamily::Provenance p);

/// Preimages f^{-1}(j) of the splitter families for every k' <= k (deduplicated).
SetFamily isolator_family_from_splitters(int n, int k);

/// Residue classes {x : x = j mod p} for the first M = (k-1) * floor(log_q(n-1)) + 1
/// primes >= q. For a set S and any x in S, at most (k-1)*floor(log_q(n-1))
/// primes >= q divide some y - x with y in S, so one chosen prime puts x alone
/// in its class.
SetFamily isolator_family_from_residues(int n, int k);

/// Every S with 1 <= |S| <= k meets some member in exactly one element.
/// Returns whichever of the two constructions above is smaller. Runs the
/// exhaustive verifier when n <= 16 and throws ContractViolation on failure.
SetFamily isolator_family(int n, int k);

/// Same guarantee with no member of size < 2. Requires 1 <= k < n. Singletons
/// {x} become {x, y} for the k smallest y != x. The base family is the one
/// whose padded version costs the fewest isolating-cut flows.
SetFamily isolator_family_min2(int n, int k);

/// Exhaustive check of the isolator property (and minimum member size).
bool verify_isolator(const SetFamily& family, int k, int min_set_size = 0);

/// Deterministic list of the first `count` primes >= from.
std::vector<long long> primes_from(long long from, int count);

}  // namespace isocut
