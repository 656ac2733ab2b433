#ifndef WINCX_IO_HPP
#define WINCX_IO_HPP

#include <iosfwd>
#include <string>

#include "wincx/gen.hpp"
#include "wincx/graph.hpp"

namespace wincx {

// Text edge-list format: a header line `digraph <n>` or `graph <n>`, then
// one `u v` pair per line (arcs for digraphs, edges for graphs).  `#` starts
// a comment running to end of line; blank lines are skipped.  Vertex ids
// must lie in [0, n).
LoadedGraph read_graph(std::istream& in);
LoadedGraph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Digraph& g);
void write_graph(std::ostream& out, const Graph& g);
void write_graph(std::ostream& out, const LoadedGraph& g);
std::string graph_to_string(const LoadedGraph& g);

// Dispatches on the source form: "gen:kind,key=value,..." builds the named
// generator in-process, anything else is opened as an edge-list file.
LoadedGraph load_input(const std::string& source);

}  // namespace wincx

#endif
