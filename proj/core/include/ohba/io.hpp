#ifndef OHBA_IO_HPP
#define OHBA_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "ohba/graph.hpp"
#include "ohba/list_assignment.hpp"

namespace ohba {

// Graph text format, whitespace separated:
//   join <p> <a> <b>
// or
//   n <count>
//   e <u> <v>          (0-based endpoints, one edge per line)
// Blank lines and lines starting with '#' are ignored.
using ParsedGraph = std::variant<JoinGraph, GenericGraph>;

ParsedGraph read_graph(std::istream& in);
ParsedGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const ParsedGraph& g);

int graph_vertex_count(const ParsedGraph& g);
std::string graph_vertex_name(const ParsedGraph& g, Vertex v);

// List-assignment text format: an optional header line `k <int>`, then one
// line per vertex `<id>: c1 c2 ...`.  Ids are w1..wp / x1..xa / y1..yb for
// join graphs and plain 0-based integers for generic graphs.  Every vertex
// of the graph must get exactly one list; with a `k` header every list must
// have exactly k colors.  Errors carry the offending line number.
ListAssignment read_lists(std::istream& in, const ParsedGraph& g);
ListAssignment read_lists_file(const std::string& path, const ParsedGraph& g);
void write_lists(std::ostream& out, const ParsedGraph& g, const ListAssignment& L);

// A coloring serializes as a list assignment whose lists are singletons.
void write_coloring(std::ostream& out, const ParsedGraph& g, const Coloring& f);

} // namespace ohba

#endif
