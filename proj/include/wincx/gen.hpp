#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wincx/graph.hpp"

namespace wincx {

// Finite windows of the standard example families. Vertex numbering is
// documented per generator; closed-form distance claims that only hold for
// the infinite family survive windowing on interior pairs (line family) or
// exactly (cycles, zigzag, lattice boxes).

// Vertices v_0..v_{count-1}, arcs v_i → v_{i+1}.
Digraph make_line_digraph(int count);
// Same vertices, undirected edges {v_i, v_{i+1}}.
Graph make_line_graph(int count);
// Vertices u_0..u_{r-1}, arcs u_i → u_{i+1 mod r}. Distance is
// min(|p-q|, r-|p-q|).
Digraph make_cycle_digraph(int r);
Graph make_cycle_graph(int r);
// Vertices v_0..v_{count-1}; every even vertex points at both neighbours:
// arcs v_{2l} → v_{2l-1} and v_{2l} → v_{2l+1}. Distance is 1 between
// consecutive vertices and ∞ between all other distinct pairs.
Digraph make_zigzag(int count);
// Directed segment on `count` vertices (arcs i → i+1); count = 2 is the
// one-arc segment used as the target of the zigzag parity map.
Digraph make_segment(int count = 2);
// Axis-aligned box {0..extent-1}^dims with arcs z → z + e_i. Vertex ids are
// mixed-radix encodings, last coordinate fastest. The symmetrized distance
// is Σ|z_i - z'_i| for coordinate-comparable pairs and ∞ otherwise.
Digraph make_lattice_digraph(int dims, int extent);
// Underlying box graph: distance is Σ|z_i - z'_i| for every pair.
Graph make_lattice_graph(int dims, int extent);
Graph make_complete_graph(int count);

// Result of parsing a generator spec or an input file: exactly one of the
// two members is set.
struct LoadedGraph {
  std::optional<Digraph> digraph;
  std::optional<Graph> graph;
  bool is_digraph() const { return digraph.has_value(); }
  int vertex_count() const {
    return is_digraph() ? digraph->vertex_count() : graph->vertex_count();
  }
};

// Parses "kind:key=value,..." or "kind,key=value,..." generator specs.
// Kinds: line_digraph, line_graph, cycle_digraph, cycle_graph, zigzag,
// segment, lattice_digraph, lattice_graph, complete_graph.
// Keys: n (vertex count), r (cycle length), l (lattice dims), w (extent).
LoadedGraph generate_from_spec(const std::string& spec);

// Lattice coordinate helpers (last coordinate fastest).
std::vector<int> lattice_coords(int dims, int extent, int id);
int lattice_id(int extent, const std::vector<int>& coords);

}  // namespace wincx
