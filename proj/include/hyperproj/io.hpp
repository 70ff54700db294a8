#pragma once

// Text formats.
//
//   hypergraph:  "n d" header, then one hyperedge per line as d ascending ids
//   graph:       "n" header, then one edge per line as "i j" with i < j
//
// Lines starting with '#' before the header carry run metadata and are
// skipped by the readers. Output uses LF line endings only.

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperproj/model.hpp"

namespace hyperproj {

void write_hypergraph(std::ostream& out, const Hypergraph& h,
                      const std::vector<std::string>& comments = {});
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});

// Throw ParseError on malformed input and InvalidParams on content that
// violates the type invariants (e.g. unsorted ids or duplicates).
Hypergraph read_hypergraph(std::istream& in);
Graph read_graph(std::istream& in);

Hypergraph read_hypergraph_file(const std::string& path);
Graph read_graph_file(const std::string& path);

}  // namespace hyperproj
