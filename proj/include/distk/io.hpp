#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace distk {

/// Raised for malformed input files.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what) {}
};

// Edge-list format, vertices 0-based:
//   c <comment>
//   p <n> <m>
//   e <u> <v>

inline Graph read_edge_list(std::istream& in, const std::string& source = "<input>",
                            Graph::Mode mode = Graph::Mode::kSimple) {
  std::string line;
  std::size_t lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw ParseError(source, lineno, "duplicate header");
      if (!(ls >> n >> m) || n < 0 || m < 0) throw ParseError(source, lineno, "bad header");
    } else if (tag == "e") {
      if (n < 0) throw ParseError(source, lineno, "edge before header");
      long long u, v;
      if (!(ls >> u >> v)) throw ParseError(source, lineno, "bad edge line");
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(source, lineno, "edge endpoint out of range");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    } else {
      throw ParseError(source, lineno, "unknown line tag '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(source, lineno, "trailing tokens");
  }
  if (n < 0) throw ParseError(source, lineno, "missing header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(source, lineno, "header announces " + std::to_string(m) + " edges, found " +
                                         std::to_string(edges.size()));
  try {
    return Graph(static_cast<Vertex>(n), std::move(edges), mode);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, lineno, e.what());
  }
}

inline void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment = {}) {
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

/// One vertex id per line; blank lines and `c` comments are skipped.
inline VertexSet read_vertex_set(std::istream& in, const std::string& source = "<input>") {
  std::string line;
  std::size_t lineno = 0;
  std::vector<Vertex> ids;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0) throw ParseError(source, lineno, "bad vertex id '" + tok + "'");
    if (ls >> tok) throw ParseError(source, lineno, "trailing tokens");
    ids.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(ids));
}

inline void write_vertex_set(std::ostream& out, const VertexSet& s) {
  for (Vertex v : s) out << v << '\n';
}

/// Side-car files: `key vertex-id` per line, keys may repeat.
using SideCar = std::vector<std::pair<std::string, Vertex>>;

inline SideCar read_side_car(std::istream& in, const std::string& source = "<input>") {
  SideCar out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    long long v;
    if (!(ls >> key)) continue;
    if (!(ls >> v) || v < 0) throw ParseError(source, lineno, "bad side-car entry");
    out.emplace_back(key, static_cast<Vertex>(v));
  }
  return out;
}

inline void write_side_car(std::ostream& out, const SideCar& entries) {
  for (const auto& [key, v] : entries) out << key << ' ' << v << '\n';
}

template <class Reader>
auto read_file(const std::string& path, Reader&& reader) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return reader(in, path);
}

template <class Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  writer(out);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace distk
