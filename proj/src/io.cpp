#include "hyperproj/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hyperproj/error.hpp"

namespace hyperproj {

namespace {

void write_comments(std::ostream& out, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
}

// Next line that is neither a comment nor empty; false at EOF.
bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') throw ParseError("CRLF line endings are not accepted");
    if (line.empty() || line.front() == '#') continue;
    return true;
  }
  return false;
}

template <class... T>
void parse_exact(const std::string& line, std::size_t lineno, T&... fields) {
  std::istringstream ls(line);
  ((ls >> fields) && ...);
  std::string rest;
  if (ls.fail() || (ls >> rest))
    throw ParseError("malformed line " + std::to_string(lineno) + ": '" + line + "'");
}

}  // namespace

void write_hypergraph(std::ostream& out, const Hypergraph& h,
                      const std::vector<std::string>& comments) {
  write_comments(out, comments);
  out << h.n() << ' ' << h.d() << '\n';
  for (const auto& e : h.edges()) {
    const auto vs = e.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    out << '\n';
  }
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  write_comments(out, comments);
  out << g.n() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno)) throw ParseError("missing 'n d' header");
  long long n = 0;
  int d = 0;
  parse_exact(line, lineno, n, d);
  if (n < 0 || d < 2 || d > kMaxArity) throw ParseError("bad hypergraph header");

  std::vector<Hyperedge> edges;
  while (next_data_line(in, line, lineno)) {
    std::istringstream ls(line);
    std::vector<Vertex> vs;
    long long v = 0;
    while (ls >> v) {
      if (v < 1 || v > n) throw InvalidParams("vertex out of range on line " + std::to_string(lineno));
      vs.push_back(static_cast<Vertex>(v));
    }
    if (!ls.eof() || static_cast<int>(vs.size()) != d)
      throw ParseError("expected " + std::to_string(d) + " ids on line " + std::to_string(lineno));
    for (std::size_t i = 1; i < vs.size(); ++i)
      if (vs[i - 1] >= vs[i]) throw InvalidParams("ids not strictly ascending on line " + std::to_string(lineno));
    edges.emplace_back(std::span<const Vertex>(vs));
  }
  return Hypergraph(static_cast<Vertex>(n), d, std::move(edges));
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno)) throw ParseError("missing 'n' header");
  long long n = 0;
  parse_exact(line, lineno, n);
  if (n < 0) throw ParseError("bad graph header");

  std::vector<Edge> edges;
  while (next_data_line(in, line, lineno)) {
    long long i = 0, j = 0;
    parse_exact(line, lineno, i, j);
    if (i < 1 || j > n || i >= j)
      throw InvalidParams("edge must satisfy 1 <= i < j <= n on line " + std::to_string(lineno));
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return read_hypergraph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return read_graph(in);
}

}  // namespace hyperproj
