#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "isocut/graph.hpp"

namespace isocut {

struct GeneratorSpec {
  std::string kind = "gnp-weighted";  // gnp-weighted | planted-cut | dumbbell | cycle | clique | grid
  int n = 10;
  double p = 0.3;
  Weight min_weight = 1;
  Weight max_weight = 1;
  int side = 0;           // planted-cut: size of the planted side
  Weight cross = 1;       // planted-cut: total weight across the planted cut
  int rows = 0;           // grid (cols = n / rows when 0)
  int cols = 0;
  bool connected = true;  // gnp-weighted: retry until connected
  std::uint64_t seed = 1;
};

inline constexpr int kGeneratorRetryCap = 200;

/// Deterministic in the spec. Throws InvalidInput for bad parameters or when
/// a connected gnp graph is not found within the retry cap.
///   dumbbell:    two unit K_{n/2} joined by a weight-1 edge (n even, n >= 4)
///   planted-cut: sides [0, side) and [side, n) built so that every vertex
///                degree exceeds `cross`, joined by edges of total weight `cross`
WeightedGraph generate(const GeneratorSpec& spec);

bool is_connected(const WeightedGraph& g);

/// Small helpers on a 64-bit engine that give the same stream everywhere
/// (the standard distributions are implementation-defined).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }
inline bool coin(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

}  // namespace isocut
