#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "isocut/graph.hpp"

namespace isocut {

// Edge-list text format:
//   c <comment>
//   p <n> <m>
//   <u> <v> <w>        (0-based ids, one line per edge)
WeightedGraph read_edgelist(std::istream& in);
void write_edgelist(std::ostream& out, const WeightedGraph& g);

// DIMACS max-flow problem format (1-based ids):
//   p max <n> <m>
//   n <id> s|t
//   a <u> <v> <cap>
// Each arc line is read as an undirected edge of the given capacity; the
// writer emits every canonical edge once.
struct DimacsProblem {
  WeightedGraph graph;
  std::optional<VertexId> source;
  std::optional<VertexId> sink;
};
DimacsProblem read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const WeightedGraph& g, std::optional<VertexId> source = {},
                  std::optional<VertexId> sink = {});

enum class GraphFormat { edgelist, dimacs };
GraphFormat parse_format(const std::string& name);
DimacsProblem read_graph_file(const std::string& path, GraphFormat format);

}  // namespace isocut
