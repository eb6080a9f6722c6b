#include "isocut/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "isocut/errors.hpp"

namespace isocut {
namespace {

std::string where(int line) { return "line " + std::to_string(line) + ": "; }

template <typename T>
T read_field(std::istringstream& ls, int line, const char* what) {
  T value{};
  if (!(ls >> value)) throw InvalidInput(where(line) + "expected " + what);
  return value;
}

void expect_end(std::istringstream& ls, int line) {
  std::string extra;
  if (ls >> extra) throw InvalidInput(where(line) + "trailing token '" + extra + "'");
}

}  // namespace

WeightedGraph read_edgelist(std::istream& in) {
  std::string text;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<EdgeTriple> triples;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream ls(text);
    std::string head;
    if (!(ls >> head) || head[0] == 'c') continue;
    if (head == "p") {
      if (n >= 0) throw InvalidInput(where(line_no) + "duplicate header");
      n = read_field<long long>(ls, line_no, "vertex count");
      m = read_field<long long>(ls, line_no, "edge count");
      expect_end(ls, line_no);
      if (n < 0 || m < 0 || n > (1 << 30)) throw InvalidInput(where(line_no) + "bad header counts");
      continue;
    }
    if (n < 0) throw InvalidInput(where(line_no) + "edge before 'p' header");
    std::istringstream full(text);
    long long u = read_field<long long>(full, line_no, "u");
    long long v = read_field<long long>(full, line_no, "v");
    long long w = read_field<long long>(full, line_no, "w");
    expect_end(full, line_no);
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput(where(line_no) + "vertex id out of range");
    triples.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
  }
  if (n < 0) throw InvalidInput("missing 'p <n> <m>' header");
  if (static_cast<long long>(triples.size()) != m)
    throw InvalidInput("header declares " + std::to_string(m) + " edges, found " +
                       std::to_string(triples.size()));
  return build_graph(static_cast<int>(n), triples);
}

void write_edgelist(std::ostream& out, const WeightedGraph& g) {
  out << "p " << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

DimacsProblem read_dimacs(std::istream& in) {
  std::string text;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<EdgeTriple> triples;
  DimacsProblem prob;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream ls(text);
    std::string head;
    if (!(ls >> head) || head == "c") continue;
    if (head == "p") {
      auto kind = read_field<std::string>(ls, line_no, "problem kind");
      if (kind != "max") throw InvalidInput(where(line_no) + "expected 'p max'");
      n = read_field<long long>(ls, line_no, "vertex count");
      m = read_field<long long>(ls, line_no, "arc count");
      expect_end(ls, line_no);
      if (n < 0 || m < 0 || n > (1 << 30)) throw InvalidInput(where(line_no) + "bad header counts");
    } else if (head == "n") {
      if (n < 0) throw InvalidInput(where(line_no) + "node line before header");
      auto id = read_field<long long>(ls, line_no, "node id");
      auto role = read_field<std::string>(ls, line_no, "s|t");
      expect_end(ls, line_no);
      if (id < 1 || id > n) throw InvalidInput(where(line_no) + "node id out of range");
      if (role == "s")
        prob.source = static_cast<VertexId>(id - 1);
      else if (role == "t")
        prob.sink = static_cast<VertexId>(id - 1);
      else
        throw InvalidInput(where(line_no) + "node role must be s or t");
    } else if (head == "a") {
      if (n < 0) throw InvalidInput(where(line_no) + "arc before header");
      auto u = read_field<long long>(ls, line_no, "tail");
      auto v = read_field<long long>(ls, line_no, "head");
      auto cap = read_field<long long>(ls, line_no, "capacity");
      expect_end(ls, line_no);
      if (u < 1 || v < 1 || u > n || v > n) throw InvalidInput(where(line_no) + "arc endpoint out of range");
      triples.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), cap});
    } else {
      throw InvalidInput(where(line_no) + "unknown line type '" + head + "'");
    }
  }
  if (n < 0) throw InvalidInput("missing 'p max' header");
  if (static_cast<long long>(triples.size()) != m)
    throw InvalidInput("header declares " + std::to_string(m) + " arcs, found " +
                       std::to_string(triples.size()));
  prob.graph = build_graph(static_cast<int>(n), triples);
  return prob;
}

void write_dimacs(std::ostream& out, const WeightedGraph& g, std::optional<VertexId> source,
                  std::optional<VertexId> sink) {
  out << "p max " << g.n() << ' ' << g.m() << '\n';
  if (source) out << "n " << *source + 1 << " s\n";
  if (sink) out << "n " << *sink + 1 << " t\n";
  for (const auto& e : g.edges()) out << "a " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
}

GraphFormat parse_format(const std::string& name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw InvalidInput("unknown graph format '" + name + "'");
}

DimacsProblem read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  if (format == GraphFormat::dimacs) return read_dimacs(in);
  return DimacsProblem{read_edgelist(in), {}, {}};
}

}  // namespace isocut
